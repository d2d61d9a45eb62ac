#include "corrclass/dsl.hpp"

#include <cctype>
#include <sstream>

namespace corrclass::dsl {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    long value = 0;
    SourcePos pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        skip_space();
        tok_.pos = pos_;
        if (i_ >= text_.size()) {
            tok_ = Token{Tok::End, "", 0, pos_};
            return;
        }
        const char c = text_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (i_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_' ||
                    text_[i_] == '-')) {
                // '-' continues an identifier only when followed by a letter
                // (kebab-case keywords like pro-smooth, base-change).
                if (text_[i_] == '-') {
                    if (i_ + 1 >= text_.size() ||
                        !std::isalpha(static_cast<unsigned char>(text_[i_ + 1])))
                        break;
                }
                word.push_back(text_[i_]);
                bump();
            }
            tok_ = Token{Tok::Ident, word, 0, tok_.pos};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[i_ + 1])))) {
            std::string num;
            if (c == '-') {
                num.push_back('-');
                bump();
            }
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
                num.push_back(text_[i_]);
                bump();
            }
            long value = 0;
            try {
                value = std::stol(num);
            } catch (const std::out_of_range&) {
                throw ParseError(tok_.pos, "integer literal out of range: " + num);
            }
            tok_ = Token{Tok::Int, num, value, tok_.pos};
            return;
        }
        // Multi-character punctuation.
        if (c == '<' && i_ + 1 < text_.size() && text_[i_ + 1] == '-') {
            bump();
            bump();
            tok_ = Token{Tok::Punct, "<-", 0, tok_.pos};
            return;
        }
        if (c == '-' && i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
            bump();
            bump();
            tok_ = Token{Tok::Punct, "->", 0, tok_.pos};
            return;
        }
        bump();
        tok_ = Token{Tok::Punct, std::string(1, c), 0, tok_.pos};
    }

    void skip_space() {
        while (i_ < text_.size()) {
            const char c = text_[i_];
            if (c == '#') {
                while (i_ < text_.size() && text_[i_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[i_] == '\n') {
            ++pos_.line;
            pos_.col = 1;
        } else {
            ++pos_.col;
        }
        ++i_;
    }

    const std::string& text_;
    std::size_t i_ = 0;
    SourcePos pos_;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Scenario parse() {
        Scenario s;
        while (lex_.peek().kind != Tok::End) {
            const Token head = lex_.peek();
            if (head.kind != Tok::Ident) fail(head.pos, "expected a declaration or directive");
            if (head.text == "check") {
                s.directives.push_back(parse_directive());
            } else {
                s.decls.push_back(parse_declaration());
            }
        }
        return s;
    }

  private:
    [[noreturn]] void fail(SourcePos pos, const std::string& message) {
        throw ParseError(pos, message);
    }

    Token expect_ident(const char* what) {
        const Token t = lex_.take();
        if (t.kind != Tok::Ident) fail(t.pos, std::string("expected ") + what);
        return t;
    }

    Token expect_int(const char* what) {
        const Token t = lex_.take();
        if (t.kind != Tok::Int) fail(t.pos, std::string("expected ") + what);
        return t;
    }

    void expect_punct(const std::string& p) {
        const Token t = lex_.take();
        if (t.kind != Tok::Punct || t.text != p) fail(t.pos, "expected '" + p + "'");
    }

    void expect_keyword(const std::string& k) {
        const Token t = lex_.take();
        if (t.kind != Tok::Ident || t.text != k) fail(t.pos, "expected keyword '" + k + "'");
    }

    bool peek_punct(const std::string& p) {
        return lex_.peek().kind == Tok::Punct && lex_.peek().text == p;
    }

    bool peek_ident(const std::string& k) {
        return lex_.peek().kind == Tok::Ident && lex_.peek().text == k;
    }

    std::vector<int> parse_int_list_paren() {
        expect_punct("(");
        std::vector<int> out;
        if (!peek_punct(")")) {
            out.push_back(static_cast<int>(expect_int("an integer").value));
            while (peek_punct(",")) {
                lex_.take();
                out.push_back(static_cast<int>(expect_int("an integer").value));
            }
        }
        expect_punct(")");
        return out;
    }

    SpaceRef parse_space_ref() {
        const Token t = expect_ident("a space name or P(...)");
        if (t.text == "P") return SpaceRef{"", parse_int_list_paren()};
        return SpaceRef{t.text, {}};
    }

    /// `t3` -> 3, `s2` -> 2 with the given prefix.
    int parse_factor_token(char prefix) {
        const Token t = expect_ident("a factor like t1 or s1");
        if (t.text.size() < 2 || t.text[0] != prefix)
            fail(t.pos, std::string("expected a '") + prefix + "<n>' factor");
        for (std::size_t i = 1; i < t.text.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
                fail(t.pos, std::string("expected a '") + prefix + "<n>' factor");
        try {
            return std::stoi(t.text.substr(1));
        } catch (const std::out_of_range&) {
            fail(t.pos, "factor index out of range in '" + t.text + "'");
        }
    }

    Declaration parse_declaration() {
        const Token head = lex_.take();
        Declaration d;
        d.pos = head.pos;
        if (head.text == "space") {
            d.kind = Declaration::Kind::Space;
            d.name = expect_ident("a space name").text;
            expect_punct("=");
            expect_keyword("P");
            d.dims = parse_int_list_paren();
            expect_punct(";");
            return d;
        }
        if (head.text == "morphism") {
            d.kind = Declaration::Kind::Morphism;
            d.name = expect_ident("a morphism name").text;
            expect_punct(":");
            d.source = parse_space_ref();
            expect_punct("->");
            d.target = parse_space_ref();
            expect_punct("{");
            if (!peek_punct("}")) {
                while (true) {
                    AssignSyntax a;
                    a.target_factor = parse_factor_token('t');
                    expect_punct("<-");
                    if (peek_ident("const")) {
                        lex_.take();
                        a.source_factor = 0;
                    } else {
                        a.source_factor = parse_factor_token('s');
                    }
                    d.assigns.push_back(a);
                    if (!peek_punct(",")) break;
                    lex_.take();
                }
            }
            expect_punct("}");
            return d;
        }
        if (head.text == "bundle") {
            d.kind = Declaration::Kind::Bundle;
            d.name = expect_ident("a bundle name").text;
            expect_keyword("on");
            d.base = parse_space_ref();
            expect_punct("=");
            if (lex_.peek().kind == Tok::Int && lex_.peek().value == 0) {
                lex_.take();  // the rank-0 bundle
            } else {
                while (true) {
                    expect_keyword("O");
                    d.summands.push_back(parse_int_list_paren());
                    if (!peek_punct("+")) break;
                    lex_.take();
                }
            }
            expect_punct(";");
            return d;
        }
        if (head.text == "subvariety") {
            d.kind = Declaration::Kind::Subvariety;
            d.name = expect_ident("a subvariety name").text;
            expect_keyword("in");
            d.ambient = parse_space_ref();
            expect_punct("=");
            expect_keyword("L");
            d.sub_dims = parse_int_list_paren();
            expect_punct(";");
            return d;
        }
        if (head.text == "cf") {
            d.kind = Declaration::Kind::Cf;
            d.name = expect_ident("a constructible-function name").text;
            expect_punct("=");
            long sign = 1;
            if (peek_punct("-")) {
                lex_.take();
                sign = -1;
            }
            while (true) {
                long coeff = sign;
                if (lex_.peek().kind == Tok::Int) {
                    coeff = sign * lex_.take().value;
                    expect_punct("*");
                }
                expect_keyword("ind");
                expect_punct("(");
                d.cf_terms.emplace_back(coeff, expect_ident("a subvariety name").text);
                expect_punct(")");
                if (peek_punct("+")) {
                    lex_.take();
                    sign = 1;
                } else if (peek_punct("-")) {
                    lex_.take();
                    sign = -1;
                } else {
                    break;
                }
            }
            expect_punct(";");
            return d;
        }
        if (head.text == "corr") {
            d.name = expect_ident("a correspondence name").text;
            if (peek_punct("=")) {
                lex_.take();
                expect_keyword("compose");
                d.kind = Declaration::Kind::CorrCompose;
                d.lhs = expect_ident("a correspondence name").text;
                d.rhs = expect_ident("a correspondence name").text;
                expect_punct(";");
                return d;
            }
            d.kind = Declaration::Kind::Corr;
            expect_punct(":");
            d.corr_source = parse_space_ref();
            expect_punct("<-");
            d.corr_apex = parse_space_ref();
            expect_punct("->");
            d.corr_target = parse_space_ref();
            expect_punct("{");
            expect_keyword("left");
            d.left_name = expect_ident("a morphism name").text;
            expect_punct(",");
            expect_keyword("right");
            d.right_name = expect_ident("a morphism name").text;
            expect_punct("}");
            return d;
        }
        if (head.text == "bicycle") {
            d.name = expect_ident("a bicycle name").text;
            if (peek_punct("=")) {
                lex_.take();
                const Token op = expect_ident("prod, push or pull");
                if (op.text == "prod") {
                    d.kind = Declaration::Kind::BicycleProd;
                    const Token mode = expect_ident("tensor or whitney");
                    if (mode.text != "tensor" && mode.text != "whitney")
                        fail(mode.pos, "expected tensor or whitney");
                    d.op_mode = mode.text;
                } else if (op.text == "push" || op.text == "pull") {
                    d.kind = op.text == "push" ? Declaration::Kind::BicyclePush
                                               : Declaration::Kind::BicyclePull;
                    const Token side = expect_ident("left or right");
                    if (side.text != "left" && side.text != "right")
                        fail(side.pos, "expected left or right");
                    d.op_mode = side.text;
                } else {
                    fail(op.pos, "expected prod, push or pull");
                }
                d.lhs = expect_ident("an operand name").text;
                d.rhs = expect_ident("an operand name").text;
                expect_punct(";");
                return d;
            }
            d.kind = Declaration::Kind::Bicycle;
            expect_punct(":");
            d.corr_source = parse_space_ref();
            expect_punct("<-");
            d.corr_apex = parse_space_ref();
            expect_punct("->");
            d.corr_target = parse_space_ref();
            expect_keyword("with");
            d.bundle_name = expect_ident("a bundle name").text;
            expect_punct("{");
            expect_keyword("left");
            d.left_name = expect_ident("a morphism name").text;
            expect_punct(",");
            expect_keyword("right");
            d.right_name = expect_ident("a morphism name").text;
            expect_punct("}");
            return d;
        }
        if (head.text == "zigzag") {
            d.kind = Declaration::Kind::Zigzag;
            d.name = expect_ident("a zigzag name").text;
            expect_punct("=");
            d.links.push_back(expect_ident("a correspondence name").text);
            while (peek_punct("~")) {
                lex_.take();
                d.links.push_back(expect_ident("a correspondence name").text);
            }
            expect_keyword("kind");
            const Token k = expect_ident("pro-smooth, pro-lci or smooth");
            if (k.text != "pro-smooth" && k.text != "pro-lci" && k.text != "smooth")
                fail(k.pos, "expected pro-smooth, pro-lci or smooth");
            d.zigzag_kind = k.text;
            expect_punct(";");
            return d;
        }
        fail(head.pos, "unknown declaration '" + head.text + "'");
    }

    Directive parse_directive() {
        const Token head = lex_.take();  // "check"
        Directive dir;
        dir.pos = head.pos;
        const Token what = expect_ident("a check kind");
        if (what.text == "functoriality") {
            dir.kind = Directive::Kind::Functoriality;
            dir.functor = expect_ident("a functor name").text;
            dir.args.push_back(expect_ident("a correspondence name").text);
            dir.args.push_back(expect_ident("a correspondence name").text);
            expect_punct(";");
            return dir;
        }
        if (what.text == "naturality" || what.text == "corrupted-naturality") {
            dir.kind = what.text == "naturality" ? Directive::Kind::Naturality
                                                 : Directive::Kind::CorruptedNaturality;
            const Token t = expect_ident("td, chern or hirzebruch");
            if (t.text != "td" && t.text != "chern" && t.text != "hirzebruch")
                fail(t.pos, "expected td, chern or hirzebruch");
            dir.transform = t.text;
            dir.args.push_back(expect_ident("a correspondence name").text);
            expect_punct(";");
            return dir;
        }
        if (what.text == "zigzag-covariance") {
            dir.kind = Directive::Kind::ZigzagCovariance;
            dir.functor = expect_ident("a functor name").text;
            dir.args.push_back(expect_ident("a zigzag name").text);
            dir.args.push_back(expect_ident("a zigzag name").text);
            expect_punct(";");
            return dir;
        }
        for (const std::string& s : known_suites()) {
            if (what.text == s) {
                dir.kind = Directive::Kind::Suite;
                dir.suite = s;
                while (lex_.peek().kind == Tok::Ident) {
                    const Token opt = lex_.take();
                    if (opt.text == "count")
                        dir.count = expect_int("a count").value;
                    else if (opt.text == "dim")
                        dir.dim = expect_int("a dimension bound").value;
                    else
                        fail(opt.pos, "unknown suite option '" + opt.text + "'");
                }
                expect_punct(";");
                return dir;
            }
        }
        fail(what.pos, "unknown check '" + what.text + "'");
    }

    Lexer lex_;
};

std::string space_ref_str(const SpaceRef& r) {
    if (!r.is_literal()) return r.name;
    std::ostringstream os;
    os << "P(";
    for (std::size_t i = 0; i < r.dims.size(); ++i) {
        if (i) os << ",";
        os << r.dims[i];
    }
    os << ")";
    return os.str();
}

std::string int_list_str(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

}  // namespace

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> names = {
        "hrr",           "specializations", "covariance-suite", "naturality-suite",
        "base-change",   "bicycle-suite",   "zigzag-suite",     "smooth-suite",
        "negative-controls"};
    return names;
}

Scenario parse_scenario(const std::string& text) { return Parser(text).parse(); }

std::string print_scenario(const Scenario& s) {
    std::ostringstream os;
    for (const Declaration& d : s.decls) {
        switch (d.kind) {
            case Declaration::Kind::Space:
                os << "space " << d.name << " = P(" << int_list_str(d.dims) << ");\n";
                break;
            case Declaration::Kind::Morphism: {
                os << "morphism " << d.name << ": " << space_ref_str(d.source) << " -> "
                   << space_ref_str(d.target) << " {";
                for (std::size_t i = 0; i < d.assigns.size(); ++i) {
                    os << (i ? ", " : " ") << "t" << d.assigns[i].target_factor << " <- ";
                    if (d.assigns[i].source_factor == 0)
                        os << "const";
                    else
                        os << "s" << d.assigns[i].source_factor;
                }
                os << (d.assigns.empty() ? "}" : " }") << "\n";
                break;
            }
            case Declaration::Kind::Bundle: {
                os << "bundle " << d.name << " on " << space_ref_str(d.base) << " = ";
                if (d.summands.empty()) {
                    os << "0";
                } else {
                    for (std::size_t i = 0; i < d.summands.size(); ++i) {
                        if (i) os << " + ";
                        os << "O(" << int_list_str(d.summands[i]) << ")";
                    }
                }
                os << ";\n";
                break;
            }
            case Declaration::Kind::Subvariety:
                os << "subvariety " << d.name << " in " << space_ref_str(d.ambient) << " = L("
                   << int_list_str(d.sub_dims) << ");\n";
                break;
            case Declaration::Kind::Cf: {
                os << "cf " << d.name << " = ";
                for (std::size_t i = 0; i < d.cf_terms.size(); ++i) {
                    const auto& [coeff, name] = d.cf_terms[i];
                    const long mag = coeff < 0 ? -coeff : coeff;
                    if (i == 0) {
                        if (coeff < 0) os << "-";
                    } else {
                        os << (coeff < 0 ? " - " : " + ");
                    }
                    if (mag != 1) os << mag << "*";
                    os << "ind(" << name << ")";
                }
                os << ";\n";
                break;
            }
            case Declaration::Kind::Corr:
                os << "corr " << d.name << " : " << space_ref_str(d.corr_source) << " <- "
                   << space_ref_str(d.corr_apex) << " -> " << space_ref_str(d.corr_target)
                   << " { left " << d.left_name << ", right " << d.right_name << " }\n";
                break;
            case Declaration::Kind::CorrCompose:
                os << "corr " << d.name << " = compose " << d.lhs << " " << d.rhs << ";\n";
                break;
            case Declaration::Kind::Bicycle:
                os << "bicycle " << d.name << " : " << space_ref_str(d.corr_source) << " <- "
                   << space_ref_str(d.corr_apex) << " -> " << space_ref_str(d.corr_target)
                   << " with " << d.bundle_name << " { left " << d.left_name << ", right "
                   << d.right_name << " }\n";
                break;
            case Declaration::Kind::BicycleProd:
                os << "bicycle " << d.name << " = prod " << d.op_mode << " " << d.lhs << " "
                   << d.rhs << ";\n";
                break;
            case Declaration::Kind::BicyclePush:
                os << "bicycle " << d.name << " = push " << d.op_mode << " " << d.lhs << " "
                   << d.rhs << ";\n";
                break;
            case Declaration::Kind::BicyclePull:
                os << "bicycle " << d.name << " = pull " << d.op_mode << " " << d.lhs << " "
                   << d.rhs << ";\n";
                break;
            case Declaration::Kind::Zigzag: {
                os << "zigzag " << d.name << " = ";
                for (std::size_t i = 0; i < d.links.size(); ++i) {
                    if (i) os << " ~ ";
                    os << d.links[i];
                }
                os << " kind " << d.zigzag_kind << ";\n";
                break;
            }
        }
    }
    for (const Directive& dir : s.directives) {
        switch (dir.kind) {
            case Directive::Kind::Functoriality:
                os << "check functoriality " << dir.functor << " " << dir.args[0] << " "
                   << dir.args[1] << ";\n";
                break;
            case Directive::Kind::Naturality:
                os << "check naturality " << dir.transform << " " << dir.args[0] << ";\n";
                break;
            case Directive::Kind::CorruptedNaturality:
                os << "check corrupted-naturality " << dir.transform << " " << dir.args[0]
                   << ";\n";
                break;
            case Directive::Kind::ZigzagCovariance:
                os << "check zigzag-covariance " << dir.functor << " " << dir.args[0] << " "
                   << dir.args[1] << ";\n";
                break;
            case Directive::Kind::Suite:
                os << "check " << dir.suite;
                if (dir.count >= 0) os << " count " << dir.count;
                if (dir.dim >= 0) os << " dim " << dir.dim;
                os << ";\n";
                break;
        }
    }
    return os.str();
}

}  // namespace corrclass::dsl
