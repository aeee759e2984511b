// SPDX-License-Identifier: Apache-2.0
//
// Exact subtraction-free rational functions on named coordinate tori, and
// their min-plus tropicalizations.
//
// A PosPoly is a Laurent polynomial with strictly positive rational
// coefficients over a fixed Space (an ordered list of coordinate names).
// A PosRat is a quotient of two PosPolys kept in a normal form: the largest
// common Laurent monomial is divided out and the quotient is scaled so the
// lexicographically least term of the denominator has coefficient 1. When
// the denominator divides the numerator exactly (with a subtraction-free
// quotient) the fraction is collapsed; beyond that no polynomial gcd is
// attempted, so `equals` decides equality by cross multiplication.
//
// Tropicalization uses the min convention: a positive sum of monomials
// sum c_u x^u tropicalizes to min_u <xi, u>, and [P/Q]trop = trop P - trop Q
// pointwise. For maps whose coordinates are single monomials (MonomialMap)
// tropicalization is the linear map of exponent vectors, available as an
// exact integer matrix via linear_matrix().

#ifndef STRINGCONE_POSRAT_HPP
#define STRINGCONE_POSRAT_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stringcone/errors.hpp"

namespace stringcone {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Expo = long long;               // single exponent
using ExpoVec = std::vector<Expo>;    // one exponent per coordinate

// An ordered list of coordinate names, shared by value semantics through a
// shared_ptr. Spaces compare by name list.
class Space {
public:
    explicit Space(std::vector<std::string> names);
    const std::vector<std::string>& names() const { return names_; }
    std::size_t dim() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int index_of(const std::string& name) const; // -1 if absent
    bool operator==(const Space& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using SpacePtr = std::shared_ptr<const Space>;

SpacePtr make_space(std::vector<std::string> names);

// Subtraction-free Laurent polynomial: exponent vector -> coefficient > 0.
// The map's lexicographic key order fixes the canonical term order used by
// serialization and by the normal form.
class PosPoly {
public:
    PosPoly() = default;
    explicit PosPoly(SpacePtr space) : space_(std::move(space)) {}

    static PosPoly constant(SpacePtr space, const Rat& value);
    static PosPoly monomial(SpacePtr space, const ExpoVec& exps, const Rat& coeff);
    static PosPoly variable(SpacePtr space, const std::string& name);

    const SpacePtr& space() const { return space_; }
    const std::map<ExpoVec, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    // Adds coeff * x^exps (coeff may be any positive rational).
    void add_term(const ExpoVec& exps, const Rat& coeff);

    PosPoly operator+(const PosPoly& other) const;
    PosPoly operator*(const PosPoly& other) const;
    PosPoly scaled(const Rat& factor) const;           // factor > 0
    PosPoly shifted(const ExpoVec& monomial) const;    // multiply by x^monomial
    PosPoly pow(unsigned e) const;

    bool operator==(const PosPoly& other) const;

    // Componentwise minimum of all exponent vectors (the largest Laurent
    // monomial dividing every term). Zero vector for the zero polynomial.
    ExpoVec content() const;

    std::string to_string() const;

private:
    SpacePtr space_;
    std::map<ExpoVec, Rat> terms_;
};

// Quotient of subtraction-free Laurent polynomials in normal form.
class PosRat {
public:
    PosRat() = default;
    PosRat(PosPoly num, PosPoly den);

    static PosRat constant(SpacePtr space, const Rat& value);
    static PosRat monomial(SpacePtr space, const ExpoVec& exps, const Rat& coeff);
    static PosRat variable(SpacePtr space, const std::string& name);
    static PosRat one(SpacePtr space) { return constant(std::move(space), 1); }

    const PosPoly& num() const { return num_; }
    const PosPoly& den() const { return den_; }
    const SpacePtr& space() const { return num_.space(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }
    bool has_monomial_denominator() const { return den_.is_monomial(); }

    PosRat operator+(const PosRat& other) const;
    PosRat operator*(const PosRat& other) const;
    PosRat operator/(const PosRat& other) const;
    PosRat inv() const;
    PosRat pow(long long e) const;

    // Exact equality of rational functions (cross multiplication).
    bool equals(const PosRat& other) const;

    // Exact evaluation at a positive rational point (for randomized tests).
    Rat eval(const std::vector<Rat>& point) const;

    std::string to_string() const;

private:
    void normalize();
    PosPoly num_, den_;
};

// A tuple of PosRats defining a map between tori.
struct RationalMap {
    SpacePtr source, target;
    std::vector<PosRat> coords; // size target->dim(), each over `source`

    bool is_monomial() const;
    std::string to_string() const;
};

RationalMap identity_map(const SpacePtr& space);

// f o m : pulls a function on m's target back to m's source.
PosRat substitute(const PosRat& f, const RationalMap& m);

// g o f (apply f first). f: A -> B, g: B -> C gives A -> C.
RationalMap compose(const RationalMap& g, const RationalMap& f);

// True iff both maps have the same source/target and all coordinates are
// equal rational functions.
bool maps_equal(const RationalMap& a, const RationalMap& b);

// The tropicalization of a PosRat: two exponent sets (numerator and
// denominator); evaluates pointwise as min over the first minus min over
// the second.
struct TropForm {
    SpacePtr space;
    std::set<ExpoVec> num_exps, den_exps;

    long long eval(const std::vector<long long>& point) const;
    std::string to_string() const;
};

TropForm tropicalize(const PosRat& f);

// Piecewise-linear (tropicalized) map, evaluated pointwise.
struct TropMap {
    SpacePtr source, target;
    std::vector<TropForm> coords;

    std::vector<long long> eval(const std::vector<long long>& point) const;
};

TropMap trop_map(const RationalMap& m);

// For a MonomialMap (every coordinate one monomial with coefficient 1):
// the exact integer matrix of its tropicalization, rows indexed by target
// coordinates. Throws DomainError otherwise.
std::vector<std::vector<BigInt>> linear_matrix(const RationalMap& m);

} // namespace stringcone

#endif
