#pragma once

#include <map>

#include "corrclass/ktheory.hpp"
#include "corrclass/spaces.hpp"

namespace corrclass {

/// A constructible function on a model space: a Z-linear combination of
/// indicator functions 1_Z of canonical subvarieties. The generator set of
/// a space is finite (prod (n_i + 1) choices).
class ConstructibleFn {
  public:
    ConstructibleFn() = default;
    explicit ConstructibleFn(Space space) : space_(std::move(space)) {}

    static ConstructibleFn indicator(const Subvariety& z, long coeff = 1);
    /// 1_X, the characteristic function of the whole space.
    static ConstructibleFn one(const Space& x);

    const Space& space() const { return space_; }
    const std::map<Subvariety, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ConstructibleFn& add(const Subvariety& z, long coeff);
    friend ConstructibleFn operator+(const ConstructibleFn& a, const ConstructibleFn& b);
    friend ConstructibleFn operator-(const ConstructibleFn& a, const ConstructibleFn& b);
    ConstructibleFn scaled(long c) const;

    friend bool operator==(const ConstructibleFn& a, const ConstructibleFn& b) {
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ConstructibleFn& a, const ConstructibleFn& b) {
        return !(a == b);
    }

    std::string str() const;

  private:
    Space space_;
    std::map<Subvariety, long> terms_;
};

/// A generator of the K_0(V/X) model: a model space V together with its
/// structure morphism V -> X, canonicalized by the lexicographically
/// minimal relabeling of V's factors. Subvariety embeddings are the
/// canonical basis; proper pushforward can produce non-embedding
/// generators, which remain free generators (scissor relations are not
/// quotiented).
class MotivicGenerator {
  public:
    MotivicGenerator() = default;
    explicit MotivicGenerator(Morphism structure);

    static MotivicGenerator of_subvariety(const Subvariety& z);
    static MotivicGenerator identity(const Space& x);

    const Morphism& structure() const { return structure_; }
    const Space& total_space() const { return structure_.source(); }
    const Space& base() const { return structure_.target(); }

    friend bool operator==(const MotivicGenerator& a, const MotivicGenerator& b) {
        return a.structure_ == b.structure_;
    }
    friend bool operator!=(const MotivicGenerator& a, const MotivicGenerator& b) {
        return !(a == b);
    }
    friend bool operator<(const MotivicGenerator& a, const MotivicGenerator& b) {
        return a.structure_ < b.structure_;
    }

    /// "[P(1) -> P(2) { t1 <- s1 }]".
    std::string str() const;

  private:
    Morphism structure_;  // canonical under factor relabeling of the source
};

/// An element of the K_0(V/X) model: a Z-linear combination of canonical
/// generators.
class MotivicClass {
  public:
    MotivicClass() = default;
    explicit MotivicClass(Space space) : space_(std::move(space)) {}

    static MotivicClass of_generator(const MotivicGenerator& g, long coeff = 1);
    static MotivicClass of_subvariety(const Subvariety& z, long coeff = 1);

    const Space& space() const { return space_; }
    const std::map<MotivicGenerator, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MotivicClass& add(const MotivicGenerator& g, long coeff);
    friend MotivicClass operator+(const MotivicClass& a, const MotivicClass& b);
    friend MotivicClass operator-(const MotivicClass& a, const MotivicClass& b);
    MotivicClass scaled(long c) const;

    friend bool operator==(const MotivicClass& a, const MotivicClass& b) {
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MotivicClass& a, const MotivicClass& b) { return !(a == b); }

    std::string str() const;

  private:
    Space space_;
    std::map<MotivicGenerator, long> terms_;
};

/// All canonical subvarieties of x in lexicographic order: the canonical
/// bases of F(x) and of the K_0(V/x) model.
std::vector<Subvariety> subvariety_basis(const Space& x);

/// Topological Euler characteristic of prod P^{n_i}: prod (n_i + 1).
long euler_characteristic(const Space& x);

/// Proper pushforward of constructible functions: fiberwise Euler
/// characteristic, computed on indicator generators.
ConstructibleFn cf_pushforward(const Morphism& f, const ConstructibleFn& phi);

/// Smooth pullback of constructible functions: composition with f.
/// Throws unsupported_leg_error when g is not smooth in the model.
ConstructibleFn cf_pullback(const Morphism& g, const ConstructibleFn& phi);

/// MacPherson Chern transformation on the model: on a generator 1_Z it is
/// the pushforward along the canonical embedding of c(TZ).
RingElement mac_chern(const ConstructibleFn& phi);

/// Proper pushforward of motivic classes: composes structure morphisms.
MotivicClass mot_pushforward(const Morphism& f, const MotivicClass& m);

/// Smooth pullback of motivic classes via the model fiber square.
MotivicClass mot_pullback(const Morphism& g, const MotivicClass& m);

/// Motivic Hirzebruch transformation: on [V -> X] it pushes T_y(TV)
/// forward along the structure morphism. Coefficients in Q[y].
RingElement hirzebruch_ty(const MotivicClass& m);

/// The comparison map to constructible functions: [V -> X] -> pushforward
/// of 1_V.
ConstructibleFn epsilon_map(const MotivicClass& m);

/// The comparison map to G_0: [V -> X] -> pushforward of [O_V].
KClass gamma_map(const MotivicClass& m);

}  // namespace corrclass
