#include "corrclass/runner.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "corrclass/ktheory.hpp"

namespace corrclass {

namespace {

using dsl::Declaration;
using dsl::Directive;
using dsl::ParseError;

Space resolve_space(const Model& m, const dsl::SpaceRef& ref, dsl::SourcePos pos) {
    if (ref.is_literal()) return Space(ref.dims);
    auto it = m.spaces.find(ref.name);
    if (it == m.spaces.end()) throw ParseError(pos, "unknown space '" + ref.name + "'");
    return it->second;
}

template <typename MapT>
const typename MapT::mapped_type& resolve(const MapT& map, const std::string& name,
                                          dsl::SourcePos pos, const char* what) {
    auto it = map.find(name);
    if (it == map.end())
        throw ParseError(pos, std::string("unknown ") + what + " '" + name + "'");
    return it->second;
}

void check_unique(const Model& m, const std::string& name, dsl::SourcePos pos) {
    const bool taken = m.spaces.count(name) || m.morphisms.count(name) ||
                       m.bundles.count(name) || m.subvarieties.count(name) ||
                       m.cfs.count(name) || m.corrs.count(name) || m.bicycles.count(name) ||
                       m.zigzags.count(name);
    if (taken) throw ParseError(pos, "duplicate name '" + name + "'");
}

}  // namespace

Model elaborate(const dsl::Scenario& s) {
    Model m;
    for (const Declaration& d : s.decls) {
        check_unique(m, d.name, d.pos);
        try {
            switch (d.kind) {
                case Declaration::Kind::Space:
                    m.spaces.emplace(d.name, Space(d.dims));
                    break;
                case Declaration::Kind::Morphism: {
                    const Space source = resolve_space(m, d.source, d.pos);
                    const Space target = resolve_space(m, d.target, d.pos);
                    std::vector<FactorAssignment> assign(
                        static_cast<std::size_t>(target.factor_count()),
                        FactorAssignment::constant());
                    std::vector<bool> seen(assign.size(), false);
                    for (const auto& a : d.assigns) {
                        if (a.target_factor < 1 || a.target_factor > target.factor_count())
                            throw ParseError(d.pos, "target factor t" +
                                                        std::to_string(a.target_factor) +
                                                        " out of range");
                        if (seen[static_cast<std::size_t>(a.target_factor - 1)])
                            throw ParseError(d.pos, "target factor t" +
                                                        std::to_string(a.target_factor) +
                                                        " assigned twice");
                        seen[static_cast<std::size_t>(a.target_factor - 1)] = true;
                        assign[static_cast<std::size_t>(a.target_factor - 1)] =
                            a.source_factor == 0 ? FactorAssignment::constant()
                                                 : FactorAssignment::pulled(a.source_factor - 1);
                    }
                    m.morphisms.emplace(d.name, Morphism(source, target, std::move(assign)));
                    break;
                }
                case Declaration::Kind::Bundle: {
                    const Space base = resolve_space(m, d.base, d.pos);
                    m.bundles.emplace(d.name, VectorBundle(base, d.summands));
                    break;
                }
                case Declaration::Kind::Subvariety: {
                    const Space ambient = resolve_space(m, d.ambient, d.pos);
                    m.subvarieties.emplace(d.name, Subvariety(ambient, d.sub_dims));
                    break;
                }
                case Declaration::Kind::Cf: {
                    ConstructibleFn fn;
                    bool first = true;
                    for (const auto& [coeff, zname] : d.cf_terms) {
                        const Subvariety& z =
                            resolve(m.subvarieties, zname, d.pos, "subvariety");
                        if (first) {
                            fn = ConstructibleFn(z.ambient());
                            first = false;
                        }
                        fn.add(z, coeff);
                    }
                    m.cfs.emplace(d.name, std::move(fn));
                    break;
                }
                case Declaration::Kind::Corr: {
                    const Morphism& left = resolve(m.morphisms, d.left_name, d.pos, "morphism");
                    const Morphism& right =
                        resolve(m.morphisms, d.right_name, d.pos, "morphism");
                    const Space x = resolve_space(m, d.corr_source, d.pos);
                    const Space apex = resolve_space(m, d.corr_apex, d.pos);
                    const Space y = resolve_space(m, d.corr_target, d.pos);
                    if (left.source() != apex || right.source() != apex ||
                        left.target() != x || right.target() != y)
                        throw ParseError(d.pos, "legs do not match the declared span");
                    m.corrs.emplace(d.name, Correspondence(left, right));
                    break;
                }
                case Declaration::Kind::CorrCompose: {
                    const Correspondence& a = resolve(m.corrs, d.lhs, d.pos, "correspondence");
                    const Correspondence& b = resolve(m.corrs, d.rhs, d.pos, "correspondence");
                    m.corrs.emplace(d.name, corr_compose(a, b));
                    break;
                }
                case Declaration::Kind::Bicycle: {
                    const Morphism& left = resolve(m.morphisms, d.left_name, d.pos, "morphism");
                    const Morphism& right =
                        resolve(m.morphisms, d.right_name, d.pos, "morphism");
                    const VectorBundle& e = resolve(m.bundles, d.bundle_name, d.pos, "bundle");
                    const Space x = resolve_space(m, d.corr_source, d.pos);
                    const Space apex = resolve_space(m, d.corr_apex, d.pos);
                    const Space y = resolve_space(m, d.corr_target, d.pos);
                    if (left.source() != apex || right.source() != apex ||
                        left.target() != x || right.target() != y)
                        throw ParseError(d.pos, "legs do not match the declared span");
                    m.bicycles.emplace(d.name, Bicycle(Correspondence(left, right), e));
                    break;
                }
                case Declaration::Kind::BicycleProd: {
                    const Bicycle& a = resolve(m.bicycles, d.lhs, d.pos, "bicycle");
                    const Bicycle& b = resolve(m.bicycles, d.rhs, d.pos, "bicycle");
                    m.bicycles.emplace(d.name,
                                       bicycle_product(d.op_mode == "tensor"
                                                           ? BicycleProduct::Tensor
                                                           : BicycleProduct::Whitney,
                                                       a, b));
                    break;
                }
                case Declaration::Kind::BicyclePush: {
                    const Morphism& f = resolve(m.morphisms, d.lhs, d.pos, "morphism");
                    const Bicycle& b = resolve(m.bicycles, d.rhs, d.pos, "bicycle");
                    m.bicycles.emplace(d.name, bicycle_push(d.op_mode == "left"
                                                                ? PushSide::LeftProper
                                                                : PushSide::RightSmooth,
                                                            f, b));
                    break;
                }
                case Declaration::Kind::BicyclePull: {
                    const Morphism& f = resolve(m.morphisms, d.lhs, d.pos, "morphism");
                    const Bicycle& b = resolve(m.bicycles, d.rhs, d.pos, "bicycle");
                    m.bicycles.emplace(d.name, bicycle_pull(d.op_mode == "left"
                                                                ? PullSide::LeftSmooth
                                                                : PullSide::RightProper,
                                                            f, b));
                    break;
                }
                case Declaration::Kind::Zigzag: {
                    std::vector<Correspondence> links;
                    for (const std::string& link : d.links)
                        links.push_back(resolve(m.corrs, link, d.pos, "correspondence"));
                    const ZigzagKind kind = zigzag_kind_from_name(d.zigzag_kind);
                    if (kind != ZigzagKind::ProSmooth) {
                        // Re-tag legs with the laxer class so validation
                        // admits embedding right legs.
                        for (Correspondence& c : links)
                            c = Correspondence(c.left(), c.right(), MorphClass::Proper,
                                               MorphClass::Lci);
                    }
                    m.zigzags.emplace(d.name, Zigzag(kind, std::move(links)));
                    break;
                }
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(d.pos, std::string(e.what()));
        }
    }
    return m;
}

bool Report::pass() const {
    for (const SuiteResult& s : suites)
        if (!s.pass()) return false;
    return true;
}

long Report::total_cases() const {
    long n = 0;
    for (const SuiteResult& s : suites) n += s.cases;
    return n;
}

namespace {

SuiteResult run_named_suite(const Directive& dir, std::uint64_t seed) {
    const long count = dir.count >= 0 ? dir.count : 25;
    const int dim = static_cast<int>(dir.dim >= 0 ? dir.dim : 6);
    if (dir.suite == "hrr") return suite_hrr();
    if (dir.suite == "specializations")
        return suite_specializations(seed, static_cast<int>(dir.count >= 0 ? dir.count : 200),
                                     dim);
    if (dir.suite == "covariance-suite")
        return suite_covariance(seed, static_cast<int>(count), dim);
    if (dir.suite == "naturality-suite")
        return suite_naturality(seed, static_cast<int>(count), dim);
    if (dir.suite == "base-change") return suite_base_change(seed, static_cast<int>(count), dim);
    if (dir.suite == "bicycle-suite") return suite_bicycle(seed, static_cast<int>(count), dim);
    if (dir.suite == "zigzag-suite") return suite_zigzag(seed, static_cast<int>(count), dim);
    if (dir.suite == "smooth-suite") return suite_smooth(seed, static_cast<int>(count), dim);
    if (dir.suite == "negative-controls") return suite_negative_controls();
    SuiteResult r{.name = dir.suite};
    r.record(false, "unknown suite '" + dir.suite + "'");
    return r;
}

std::string directive_name(const Directive& dir, std::size_t index) {
    std::ostringstream os;
    os << "d" << index << "-";
    switch (dir.kind) {
        case Directive::Kind::Functoriality:
            os << "functoriality-" << dir.functor << "-" << dir.args[0] << "-" << dir.args[1];
            break;
        case Directive::Kind::Naturality:
            os << "naturality-" << dir.transform << "-" << dir.args[0];
            break;
        case Directive::Kind::CorruptedNaturality:
            os << "corrupted-naturality-" << dir.transform << "-" << dir.args[0];
            break;
        case Directive::Kind::ZigzagCovariance:
            os << "zigzag-covariance-" << dir.functor << "-" << dir.args[0] << "-" << dir.args[1];
            break;
        case Directive::Kind::Suite:
            os << dir.suite;
            break;
    }
    return os.str();
}

}  // namespace

Report run_suites(const dsl::Scenario& s, std::uint64_t seed,
                  const std::vector<std::string>& only_suites) {
    Report report;
    report.seed = seed;
    const Model model = elaborate(s);
    for (std::size_t i = 0; i < s.directives.size(); ++i) {
        const Directive& dir = s.directives[i];
        const std::string name = directive_name(dir, i);
        if (!only_suites.empty()) {
            bool wanted = false;
            for (const std::string& w : only_suites)
                if (name.find(w) != std::string::npos) wanted = true;
            if (!wanted) continue;
        }
        const std::uint64_t dir_seed = Rng(seed).fork(name).next();
        SuiteResult result;
        try {
            switch (dir.kind) {
                case Directive::Kind::Functoriality: {
                    result.name = name;
                    const Correspondence& a = model.corrs.at(dir.args[0]);
                    const Correspondence& b = model.corrs.at(dir.args[1]);
                    result.record(
                        check_functoriality(functor_from_name(dir.functor), CorrSum::of(a),
                                            CorrSum::of(b)),
                        dir.functor + " on " + dir.args[0] + " o " + dir.args[1]);
                    break;
                }
                case Directive::Kind::Naturality:
                case Directive::Kind::CorruptedNaturality: {
                    result.name = name;
                    const Correspondence& a = model.corrs.at(dir.args[0]);
                    TransformId t = TransformId::TdBfm;
                    if (dir.transform == "chern") t = TransformId::MacChern;
                    if (dir.transform == "hirzebruch") t = TransformId::HirzebruchTy;
                    const bool corrupted = dir.kind == Directive::Kind::CorruptedNaturality;
                    const CheckResult r = corrupted
                                              ? check_naturality_without_twist(t, CorrSum::of(a))
                                              : check_naturality(t, CorrSum::of(a));
                    result.record(r, dir.transform + " on " + dir.args[0] +
                                         (corrupted ? " (twist dropped)" : ""));
                    break;
                }
                case Directive::Kind::ZigzagCovariance: {
                    result.name = name;
                    const Zigzag& a = model.zigzags.at(dir.args[0]);
                    const Zigzag& b = model.zigzags.at(dir.args[1]);
                    result.record(check_zigzag_covariance(functor_from_name(dir.functor),
                                                          ZigzagSum::of(a), ZigzagSum::of(b)),
                                  dir.functor + " on " + dir.args[0] + " ^ " + dir.args[1]);
                    break;
                }
                case Directive::Kind::Suite:
                    result = run_named_suite(dir, dir_seed);
                    result.name = name;
                    break;
            }
        } catch (const std::exception& e) {
            result.name = name;
            result.record(false, std::string("precondition violation: ") + e.what());
        }
        report.suites.push_back(std::move(result));
    }
    return report;
}

std::string report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["seed"] = r.seed;
    j["pass"] = r.pass();
    j["suites"] = nlohmann::ordered_json::array();
    for (const SuiteResult& s : r.suites) {
        nlohmann::ordered_json js;
        js["suite"] = s.name;
        js["cases"] = s.cases;
        js["passes"] = s.passes;
        js["failures"] = nlohmann::ordered_json::array();
        for (const std::string& w : s.failures) js["failures"].push_back({{"witness", w}});
        j["suites"].push_back(std::move(js));
    }
    return j.dump(2) + "\n";
}

std::string report_text(const Report& r, double elapsed_seconds) {
    std::ostringstream os;
    for (const SuiteResult& s : r.suites) {
        os << (s.pass() ? "PASS" : "FAIL") << " " << s.name << " (" << s.passes << "/" << s.cases
           << ")\n";
        for (const std::string& w : s.failures) os << "  witness: " << w << "\n";
    }
    os << (r.pass() ? "PASS" : "FAIL") << " total: " << r.total_cases() << " cases, seed "
       << r.seed << ", " << elapsed_seconds << "s\n";
    return os.str();
}

std::string eval_expr(const dsl::Scenario& s, const std::string& name) {
    const Model m = elaborate(s);
    std::ostringstream os;
    if (auto it = m.spaces.find(name); it != m.spaces.end()) {
        os << it->second.str();
    } else if (auto it2 = m.morphisms.find(name); it2 != m.morphisms.end()) {
        const auto cls = it2->second.classify();
        os << it2->second.str() << "  # proper";
        if (cls.is_smooth) os << ", smooth, rel dim " << *cls.relative_dimension;
        if (cls.is_iso) os << ", iso";
    } else if (auto it3 = m.bundles.find(name); it3 != m.bundles.end()) {
        const VectorBundle& e = it3->second;
        os << e.str() << " on " << e.base().str() << "\n";
        os << "ch: " << chern_character(e).str() << "\n";
        const KClass k = KClass::of_bundle(e);
        os << "K (t-basis): " << k.str() << "\n";
        os << "K (O-basis): " << k_obasis_str(k);
    } else if (auto it4 = m.subvarieties.find(name); it4 != m.subvarieties.end()) {
        os << it4->second.str();
    } else if (auto it5 = m.cfs.find(name); it5 != m.cfs.end()) {
        os << it5->second.str() << "\n";
        os << "mac-chern: " << mac_chern(it5->second).str();
    } else if (auto it6 = m.corrs.find(name); it6 != m.corrs.end()) {
        os << it6->second.canonicalize().str();
    } else if (auto it7 = m.bicycles.find(name); it7 != m.bicycles.end()) {
        const Bicycle& b = it7->second.canonicalize();
        os << b.str() << "\n";
        os << "grade: (" << b.grade().n << ", " << b.grade().r << ")";
    } else if (auto it8 = m.zigzags.find(name); it8 != m.zigzags.end()) {
        os << it8->second.canonicalize().str();
    } else {
        throw ParseError({0, 0}, "unknown name '" + name + "'");
    }
    os << "\n";
    return os.str();
}

std::string random_scenario(std::uint64_t seed, int max_total_dim, int count) {
    Rng rng = Rng(seed).fork("random-scenario");
    std::ostringstream os;
    os << "# generated scenario: seed " << seed << ", max total dim " << max_total_dim << "\n";
    const int pairs = std::max(1, count);
    for (int p = 0; p < pairs; ++p) {
        const Space x = random_space(rng, max_total_dim / 2, 2);
        const Space y = random_space(rng, max_total_dim / 2, 2);
        const Space z = random_space(rng, max_total_dim / 2, 2);
        const Correspondence a = random_proper_smooth(rng, x, y, max_total_dim);
        const Correspondence b = random_proper_smooth(rng, y, z, max_total_dim);
        const std::string ap = "p" + std::to_string(p);
        auto emit_morphism = [&os](const std::string& mname, const Morphism& f) {
            os << "morphism " << mname << ": " << f.source().str() << " -> " << f.target().str()
               << " {";
            bool first = true;
            for (int j = 0; j < f.target().factor_count(); ++j) {
                os << (first ? " " : ", ");
                first = false;
                os << "t" << (j + 1) << " <- ";
                const FactorAssignment& fa = f.assignment()[static_cast<std::size_t>(j)];
                if (fa.is_constant())
                    os << "const";
                else
                    os << "s" << (fa.source_factor + 1);
            }
            os << (first ? "}" : " }") << "\n";
        };
        emit_morphism(ap + "_fa", a.left());
        emit_morphism(ap + "_ga", a.right());
        emit_morphism(ap + "_fb", b.left());
        emit_morphism(ap + "_gb", b.right());
        os << "corr " << ap << "_a : " << x.str() << " <- " << a.apex().str() << " -> "
           << y.str() << " { left " << ap << "_fa, right " << ap << "_ga }\n";
        os << "corr " << ap << "_b : " << y.str() << " <- " << b.apex().str() << " -> "
           << z.str() << " { left " << ap << "_fb, right " << ap << "_gb }\n";
        for (const char* functor : {"G0", "HTodd", "F", "HChern", "K0V", "HHirz"})
            os << "check functoriality " << functor << " " << ap << "_a " << ap << "_b;\n";
        for (const char* transform : {"td", "chern", "hirzebruch"})
            os << "check naturality " << transform << " " << ap << "_a;\n";
    }
    os << "check hrr;\n";
    os << "check specializations count 50 dim " << max_total_dim << ";\n";
    os << "check covariance-suite count 5 dim " << max_total_dim << ";\n";
    os << "check naturality-suite count 5 dim " << max_total_dim << ";\n";
    os << "check base-change count 5 dim " << max_total_dim << ";\n";
    os << "check bicycle-suite count 5 dim " << std::min(4, max_total_dim) << ";\n";
    os << "check zigzag-suite count 5 dim " << max_total_dim << ";\n";
    os << "check smooth-suite count 10 dim " << max_total_dim << ";\n";
    os << "check negative-controls;\n";
    return os.str();
}

}  // namespace corrclass
