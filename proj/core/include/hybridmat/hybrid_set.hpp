#pragma once

#include <concepts>
#include <span>
#include <utility>
#include <vector>

#include "hybridmat/size_expr.hpp"

namespace hybridmat {

// A region usable as an atom of a hybrid set: it reports an integer
// multiplicity at a point once the environment fixes its symbolic endpoints.
template <typename A>
concept RegionAtom =
    std::equality_comparable<A> &&
    requires(const A atom, const ParamEnv& env, const typename A::point_type& p) {
        { atom.multiplicity(env, p) } -> std::convertible_to<long long>;
    };

// Finite integer-linear combination of atoms, i.e. an integer-valued
// multiplicity function written intensionally. Atoms with symbolic endpoints
// are representable before any parameters are bound; pointwise queries bind
// them through the environment. Only multiplicity() is observable: merging
// and ordering of terms is representation detail, and no normal form beyond
// dropping zero coefficients is attempted.
template <RegionAtom Atom>
class HybridSet {
public:
    using atom_type = Atom;
    using point_type = typename Atom::point_type;
    using term_type = std::pair<Atom, long long>;

    HybridSet() = default;
    explicit HybridSet(Atom atom, long long coeff = 1) { add_term(std::move(atom), coeff); }

    const std::vector<term_type>& terms() const { return terms_; }
    bool has_terms() const { return !terms_.empty(); }

    long long multiplicity(const ParamEnv& env, const point_type& x) const {
        long long m = 0;
        for (const auto& [atom, coeff] : terms_) m += coeff * atom.multiplicity(env, x);
        return m;
    }
    long long multiplicity(const point_type& x) const { return multiplicity(ParamEnv{}, x); }

    HybridSet& add_term(Atom atom, long long coeff) {
        if (coeff == 0) return *this;
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            if (it->first == atom) {
                if ((it->second += coeff) == 0) terms_.erase(it);
                return *this;
            }
        }
        terms_.emplace_back(std::move(atom), coeff);
        return *this;
    }

private:
    std::vector<term_type> terms_;
};

template <RegionAtom A>
HybridSet<A> oplus(const HybridSet<A>& a, const HybridSet<A>& b) {
    HybridSet<A> r = a;
    for (const auto& [atom, coeff] : b.terms()) r.add_term(atom, coeff);
    return r;
}

template <RegionAtom A>
HybridSet<A> ominus(const HybridSet<A>& a, const HybridSet<A>& b) {
    HybridSet<A> r = a;
    for (const auto& [atom, coeff] : b.terms()) r.add_term(atom, -coeff);
    return r;
}

template <RegionAtom A>
HybridSet<A> ominus(const HybridSet<A>& a) {
    return ominus(HybridSet<A>{}, a);
}

template <RegionAtom A>
HybridSet<A> scale(long long c, const HybridSet<A>& a) {
    HybridSet<A> r;
    if (c == 0) return r;
    for (const auto& [atom, coeff] : a.terms()) r.add_term(atom, c * coeff);
    return r;
}

// Pointwise product of the indicators of two atoms over a shared point type.
template <RegionAtom L, RegionAtom R>
    requires std::same_as<typename L::point_type, typename R::point_type>
struct ProductAtom {
    using point_type = typename L::point_type;

    L left;
    R right;

    long long multiplicity(const ParamEnv& env, const point_type& p) const {
        return left.multiplicity(env, p) * right.multiplicity(env, p);
    }
    bool operator==(const ProductAtom&) const = default;
};

// Pointwise product: expands (sum_i a_i A_i)(sum_j b_j B_j) term by term.
template <RegionAtom L, RegionAtom R>
    requires std::same_as<typename L::point_type, typename R::point_type>
HybridSet<ProductAtom<L, R>> otimes(const HybridSet<L>& a, const HybridSet<R>& b) {
    HybridSet<ProductAtom<L, R>> r;
    for (const auto& [la, lc] : a.terms())
        for (const auto& [ra, rc] : b.terms()) r.add_term(ProductAtom<L, R>{la, ra}, lc * rc);
    return r;
}

// The predicates below quantify over an explicit finite point enumeration;
// for matrix work that is the bound index rectangle.

template <RegionAtom L, RegionAtom R>
    requires std::same_as<typename L::point_type, typename R::point_type>
bool is_disjoint(const HybridSet<L>& a, const HybridSet<R>& b,
                 std::span<const typename L::point_type> domain, const ParamEnv& env = {}) {
    for (const auto& x : domain)
        if (a.multiplicity(env, x) * b.multiplicity(env, x) != 0) return false;
    return true;
}

template <RegionAtom A>
bool is_reducible(const HybridSet<A>& h, std::span<const typename A::point_type> domain,
                  const ParamEnv& env = {}) {
    for (const auto& x : domain) {
        long long m = h.multiplicity(env, x);
        if (m != 0 && m != 1) return false;
    }
    return true;
}

template <RegionAtom A>
bool is_generalized_partition(std::span<const HybridSet<A>> pieces, const HybridSet<A>& whole,
                              std::span<const typename A::point_type> domain,
                              const ParamEnv& env = {}) {
    for (const auto& x : domain) {
        long long sum = 0;
        for (const auto& piece : pieces) sum += piece.multiplicity(env, x);
        if (sum != whole.multiplicity(env, x)) return false;
    }
    return true;
}

template <RegionAtom A>
bool is_strict_partition(std::span<const HybridSet<A>> pieces, const HybridSet<A>& whole,
                         std::span<const typename A::point_type> domain, const ParamEnv& env = {}) {
    if (!is_generalized_partition(pieces, whole, domain, env)) return false;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j)
            if (!is_disjoint(pieces[i], pieces[j], domain, env)) return false;
    return true;
}

} // namespace hybridmat
