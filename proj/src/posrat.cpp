// SPDX-License-Identifier: Apache-2.0

#include "stringcone/posrat.hpp"

#include <algorithm>
#include <sstream>

namespace stringcone {

namespace {

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* what) {
    if (!same_space(a, b)) throw DomainError(std::string("space mismatch in ") + what);
}

std::string rat_str(const Rat& value) {
    std::ostringstream os;
    os << numerator(value);
    if (denominator(value) != 1) os << "/" << denominator(value);
    return os.str();
}

// Working representation for the exact-division attempt: coefficients of
// either sign are allowed while the remainder is being reduced.
using SignedPoly = std::map<ExpoVec, Rat>;

void signed_add(SignedPoly& p, const ExpoVec& exps, const Rat& coeff) {
    auto it = p.find(exps);
    if (it == p.end()) {
        if (coeff != 0) p.emplace(exps, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) p.erase(it);
}

// Attempts exact division num / den in the Laurent ring (lex leading-term
// reduction). Returns true and fills `quotient` only when the division is
// exact *and* the quotient is again subtraction-free; otherwise the caller
// keeps the fraction as-is. The step cap guards against non-terminating
// reductions when the division is not exact (Laurent exponents are not
// well-ordered).
bool try_exact_division(const PosPoly& num, const PosPoly& den, PosPoly& quotient) {
    if (num.is_zero() || den.is_zero()) return false;
    SignedPoly rem(num.terms().begin(), num.terms().end());
    SignedPoly quot;
    const auto& dterms = den.terms();
    const auto dlead = std::prev(dterms.end()); // lex-greatest term of den
    std::size_t steps = 0;
    const std::size_t max_steps = 4096 + 16 * num.size() * den.size();
    while (!rem.empty()) {
        if (++steps > max_steps) return false;
        const auto rlead = std::prev(rem.end());
        ExpoVec shift(rlead->first.size());
        for (std::size_t i = 0; i < shift.size(); ++i)
            shift[i] = rlead->first[i] - dlead->first[i];
        const Rat coeff = rlead->second / dlead->second;
        signed_add(quot, shift, coeff);
        for (const auto& [dexp, dcoeff] : dterms) {
            ExpoVec e(dexp.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = dexp[i] + shift[i];
            signed_add(rem, e, -coeff * dcoeff);
        }
    }
    for (const auto& [exps, coeff] : quot)
        if (coeff < 0) return false;
    PosPoly q(num.space());
    for (const auto& [exps, coeff] : quot) q.add_term(exps, coeff);
    quotient = q;
    return true;
}

} // namespace

// ---------------------------------------------------------------- Space --

Space::Space(std::vector<std::string> names) : names_(std::move(names)) {}

int Space::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

SpacePtr make_space(std::vector<std::string> names) {
    return std::make_shared<const Space>(std::move(names));
}

// -------------------------------------------------------------- PosPoly --

PosPoly PosPoly::constant(SpacePtr space, const Rat& value) {
    PosPoly p(std::move(space));
    if (value != 0) p.add_term(ExpoVec(p.space_->dim(), 0), value);
    return p;
}

PosPoly PosPoly::monomial(SpacePtr space, const ExpoVec& exps, const Rat& coeff) {
    PosPoly p(std::move(space));
    p.add_term(exps, coeff);
    return p;
}

PosPoly PosPoly::variable(SpacePtr space, const std::string& name) {
    const int i = space->index_of(name);
    if (i < 0) throw DomainError("unknown coordinate: " + name);
    ExpoVec exps(space->dim(), 0);
    exps[static_cast<std::size_t>(i)] = 1;
    return monomial(std::move(space), exps, 1);
}

void PosPoly::add_term(const ExpoVec& exps, const Rat& coeff) {
    if (!space_) throw DomainError("term added to a poly without a space");
    if (exps.size() != space_->dim()) throw DomainError("exponent vector has wrong length");
    if (coeff <= 0) throw DomainError("subtraction-free polynomials need positive coefficients");
    terms_[exps] += coeff;
}

PosPoly PosPoly::operator+(const PosPoly& other) const {
    require_same_space(space_, other.space_, "poly addition");
    PosPoly out = *this;
    for (const auto& [exps, coeff] : other.terms_) out.terms_[exps] += coeff;
    return out;
}

PosPoly PosPoly::operator*(const PosPoly& other) const {
    require_same_space(space_, other.space_, "poly multiplication");
    PosPoly out(space_);
    for (const auto& [u, cu] : terms_)
        for (const auto& [v, cv] : other.terms_) {
            ExpoVec w(u.size());
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = u[i] + v[i];
            out.terms_[w] += cu * cv;
        }
    return out;
}

PosPoly PosPoly::scaled(const Rat& factor) const {
    if (factor <= 0) throw DomainError("scaling factor must be positive");
    PosPoly out(space_);
    for (const auto& [exps, coeff] : terms_) out.terms_[exps] = coeff * factor;
    return out;
}

PosPoly PosPoly::shifted(const ExpoVec& monomial) const {
    PosPoly out(space_);
    for (const auto& [exps, coeff] : terms_) {
        ExpoVec e(exps.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps[i] + monomial[i];
        out.terms_.emplace(std::move(e), coeff);
    }
    return out;
}

PosPoly PosPoly::pow(unsigned e) const {
    PosPoly acc = PosPoly::constant(space_, 1);
    PosPoly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = (e >>= 1u) ? base * base : base;
    }
    return acc;
}

bool PosPoly::operator==(const PosPoly& other) const {
    return same_space(space_, other.space_) && terms_ == other.terms_;
}

ExpoVec PosPoly::content() const {
    ExpoVec lo(space_->dim(), 0);
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        (void)coeff;
        if (first) {
            lo = exps;
            first = false;
        } else {
            for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], exps[i]);
        }
    }
    return lo;
}

std::string PosPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [exps, coeff] : terms_) {
        if (!first_term) os << " + ";
        first_term = false;
        bool printed = false;
        if (coeff != 1) {
            os << rat_str(coeff);
            printed = true;
        }
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (printed) os << "*";
            os << space_->name(i);
            if (exps[i] != 1) os << "^" << exps[i];
            printed = true;
        }
        if (!printed) os << "1";
    }
    return os.str();
}

// --------------------------------------------------------------- PosRat --

PosRat::PosRat(PosPoly num, PosPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_space(num_.space(), den_.space(), "fraction construction");
    if (den_.is_zero()) throw DomainError("zero denominator");
    normalize();
}

PosRat PosRat::constant(SpacePtr space, const Rat& value) {
    return PosRat(PosPoly::constant(space, value), PosPoly::constant(space, 1));
}

PosRat PosRat::monomial(SpacePtr space, const ExpoVec& exps, const Rat& coeff) {
    return PosRat(PosPoly::monomial(space, exps, coeff), PosPoly::constant(space, 1));
}

PosRat PosRat::variable(SpacePtr space, const std::string& name) {
    return PosRat(PosPoly::variable(space, name), PosPoly::constant(space, 1));
}

void PosRat::normalize() {
    if (num_.is_zero()) {
        den_ = PosPoly::constant(den_.space(), 1);
        return;
    }
    // 1. Divide out the largest common Laurent monomial.
    const ExpoVec cn = num_.content();
    const ExpoVec cd = den_.content();
    ExpoVec shift(cn.size());
    bool nontrivial = false;
    for (std::size_t i = 0; i < shift.size(); ++i) {
        shift[i] = -std::min(cn[i], cd[i]);
        nontrivial |= shift[i] != 0;
    }
    if (nontrivial) {
        num_ = num_.shifted(shift);
        den_ = den_.shifted(shift);
    }
    // 2. Collapse exact divisions (keeps mutation round trips small). Only
    //    worthwhile when a polynomial (not monomial) factor could cancel.
    constexpr std::size_t kDivisionAttemptCap = 600;
    if (!den_.is_monomial() && num_.size() <= kDivisionAttemptCap &&
        den_.size() <= kDivisionAttemptCap) {
        PosPoly q;
        if (num_.size() >= den_.size() && try_exact_division(num_, den_, q)) {
            num_ = q;
            den_ = PosPoly::constant(den_.space(), 1);
        } else if (!num_.is_monomial() && den_.size() >= num_.size() &&
                   try_exact_division(den_, num_, q)) {
            den_ = q;
            num_ = PosPoly::constant(num_.space(), 1);
        }
    }
    // 3. Scale so the lex-least denominator term has coefficient 1.
    const Rat lead = den_.terms().begin()->second;
    if (lead != 1) {
        const Rat inv_lead = Rat(denominator(lead), numerator(lead));
        num_ = num_.scaled(inv_lead);
        den_ = den_.scaled(inv_lead);
    }
}

PosRat PosRat::operator+(const PosRat& other) const {
    require_same_space(space(), other.space(), "fraction addition");
    if (den_ == other.den_) return PosRat(num_ + other.num_, den_);
    return PosRat(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

PosRat PosRat::operator*(const PosRat& other) const {
    require_same_space(space(), other.space(), "fraction multiplication");
    return PosRat(num_ * other.num_, den_ * other.den_);
}

PosRat PosRat::operator/(const PosRat& other) const {
    require_same_space(space(), other.space(), "fraction division");
    if (other.num_.is_zero()) throw DomainError("division by zero");
    return PosRat(num_ * other.den_, den_ * other.num_);
}

PosRat PosRat::inv() const {
    if (num_.is_zero()) throw DomainError("inverse of zero");
    return PosRat(den_, num_);
}

PosRat PosRat::pow(long long e) const {
    if (e == 0) return PosRat::constant(space(), 1);
    const PosRat base = e > 0 ? *this : inv();
    unsigned long long k = static_cast<unsigned long long>(e > 0 ? e : -e);
    PosRat acc = PosRat::constant(space(), 1);
    PosRat sq = base;
    while (k) {
        if (k & 1ull) acc = acc * sq;
        k >>= 1ull;
        if (k) sq = sq * sq;
    }
    return acc;
}

bool PosRat::equals(const PosRat& other) const {
    if (!same_space(space(), other.space())) return false;
    return num_ * other.den_ == other.num_ * den_;
}

Rat PosRat::eval(const std::vector<Rat>& point) const {
    auto eval_poly = [&](const PosPoly& p) {
        Rat total = 0;
        for (const auto& [exps, coeff] : p.terms()) {
            Rat term = coeff;
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                if (point[i] == 0) throw DomainError("evaluation at a zero coordinate");
                Rat power = 1;
                const Rat base = exps[i] > 0 ? point[i] : Rat(denominator(point[i]), numerator(point[i]));
                for (Expo j = 0; j < (exps[i] > 0 ? exps[i] : -exps[i]); ++j) power *= base;
                term *= power;
            }
            total += term;
        }
        return total;
    };
    return eval_poly(num_) / eval_poly(den_);
}

std::string PosRat::to_string() const {
    const bool trivial_den = den_.is_monomial() && den_.terms().begin()->second == 1 &&
                             den_.content() == ExpoVec(space()->dim(), 0);
    if (trivial_den) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------- RationalMap --

bool RationalMap::is_monomial() const {
    return std::all_of(coords.begin(), coords.end(), [](const PosRat& f) { return f.is_monomial(); });
}

std::string RationalMap::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << "; ";
        os << target->name(i) << " = " << coords[i].to_string();
    }
    return os.str();
}

RationalMap identity_map(const SpacePtr& space) {
    RationalMap m{space, space, {}};
    m.coords.reserve(space->dim());
    for (const auto& name : space->names()) m.coords.push_back(PosRat::variable(space, name));
    return m;
}

PosRat substitute(const PosRat& f, const RationalMap& m) {
    require_same_space(f.space(), m.target, "substitution");
    const std::size_t dim = m.target->dim();

    // Exponent ranges used per variable, to clear denominators only once.
    auto ranges = [&](const PosPoly& p) {
        std::vector<std::pair<Expo, Expo>> r(dim, {0, 0});
        bool first = true;
        for (const auto& [exps, coeff] : p.terms()) {
            (void)coeff;
            for (std::size_t i = 0; i < dim; ++i) {
                if (first) {
                    r[i] = {exps[i], exps[i]};
                } else {
                    r[i].first = std::min(r[i].first, exps[i]);
                    r[i].second = std::max(r[i].second, exps[i]);
                }
            }
            first = false;
        }
        return r;
    };

    // Substitutes into one subtraction-free polynomial; returns a fraction.
    auto sub_poly = [&](const PosPoly& p) -> PosRat {
        if (p.is_zero()) return PosRat::constant(m.source, 0);
        const auto range = ranges(p);
        // Power caches for numerators and denominators of the coordinates.
        std::vector<std::vector<PosPoly>> pnum(dim), pden(dim);
        auto power = [&](std::vector<PosPoly>& cache, const PosPoly& base, Expo e) -> const PosPoly& {
            auto ue = static_cast<std::size_t>(e);
            if (cache.empty()) cache.push_back(PosPoly::constant(m.source, 1));
            while (cache.size() <= ue) cache.push_back(cache.back() * base);
            return cache[ue];
        };
        PosPoly big_sum(m.source);
        for (const auto& [exps, coeff] : p.terms()) {
            PosPoly term = PosPoly::constant(m.source, coeff);
            for (std::size_t i = 0; i < dim; ++i) {
                const Expo lo = range[i].first, hi = range[i].second;
                if (lo == hi && lo == 0) continue;
                term = term * power(pnum[i], m.coords[i].num(), exps[i] - lo);
                term = term * power(pden[i], m.coords[i].den(), hi - exps[i]);
            }
            big_sum = big_sum + term;
        }
        PosPoly extra_num = PosPoly::constant(m.source, 1);
        PosPoly extra_den = PosPoly::constant(m.source, 1);
        for (std::size_t i = 0; i < dim; ++i) {
            const Expo lo = range[i].first, hi = range[i].second;
            if (lo == hi && lo == 0) continue;
            extra_den = extra_den * power(pden[i], m.coords[i].den(), hi - lo);
            if (lo > 0) {
                extra_num = extra_num * power(pnum[i], m.coords[i].num(), lo);
                extra_den = extra_den * power(pden[i], m.coords[i].den(), lo);
            } else if (lo < 0) {
                extra_num = extra_num * power(pden[i], m.coords[i].den(), -lo);
                extra_den = extra_den * power(pnum[i], m.coords[i].num(), -lo);
            }
        }
        return PosRat(big_sum * extra_num, extra_den);
    };

    return sub_poly(f.num()) / sub_poly(f.den());
}

RationalMap compose(const RationalMap& g, const RationalMap& f) {
    require_same_space(f.target, g.source, "map composition");
    RationalMap out{f.source, g.target, {}};
    out.coords.reserve(g.coords.size());
    for (const PosRat& coord : g.coords) out.coords.push_back(substitute(coord, f));
    return out;
}

bool maps_equal(const RationalMap& a, const RationalMap& b) {
    if (!same_space(a.source, b.source) || !same_space(a.target, b.target)) return false;
    if (a.coords.size() != b.coords.size()) return false;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        if (!a.coords[i].equals(b.coords[i])) return false;
    return true;
}

// ------------------------------------------------------------- TropForm --

long long TropForm::eval(const std::vector<long long>& point) const {
    auto min_over = [&](const std::set<ExpoVec>& exps) {
        bool first = true;
        long long best = 0;
        for (const ExpoVec& u : exps) {
            long long dot = 0;
            for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * point[i];
            if (first || dot < best) best = dot;
            first = false;
        }
        return best;
    };
    return min_over(num_exps) - min_over(den_exps);
}

std::string TropForm::to_string() const {
    auto block = [&](const std::set<ExpoVec>& exps) {
        std::ostringstream os;
        bool first = true;
        os << "min(";
        for (const ExpoVec& u : exps) {
            if (!first) os << ", ";
            first = false;
            bool printed = false;
            for (std::size_t i = 0; i < u.size(); ++i) {
                if (u[i] == 0) continue;
                if (printed) os << " + ";
                if (u[i] != 1) os << u[i] << "*";
                os << space->name(i);
                printed = true;
            }
            if (!printed) os << "0";
        }
        os << ")";
        return os.str();
    };
    return block(num_exps) + " - " + block(den_exps);
}

TropForm tropicalize(const PosRat& f) {
    if (f.is_zero()) throw DomainError("tropicalization of zero");
    TropForm t;
    t.space = f.space();
    for (const auto& [exps, coeff] : f.num().terms()) {
        (void)coeff;
        t.num_exps.insert(exps);
    }
    for (const auto& [exps, coeff] : f.den().terms()) {
        (void)coeff;
        t.den_exps.insert(exps);
    }
    return t;
}

std::vector<long long> TropMap::eval(const std::vector<long long>& point) const {
    std::vector<long long> out;
    out.reserve(coords.size());
    for (const TropForm& c : coords) out.push_back(c.eval(point));
    return out;
}

TropMap trop_map(const RationalMap& m) {
    TropMap t{m.source, m.target, {}};
    t.coords.reserve(m.coords.size());
    for (const PosRat& c : m.coords) t.coords.push_back(tropicalize(c));
    return t;
}

std::vector<std::vector<BigInt>> linear_matrix(const RationalMap& m) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(m.coords.size());
    for (const PosRat& c : m.coords) {
        if (!c.is_monomial()) throw DomainError("linear_matrix needs a monomial map");
        const auto& [nexp, ncoeff] = *c.num().terms().begin();
        const auto& [dexp, dcoeff] = *c.den().terms().begin();
        if (ncoeff != dcoeff) throw DomainError("linear_matrix needs unit coefficients");
        std::vector<BigInt> row(m.source->dim());
        for (std::size_t i = 0; i < row.size(); ++i) row[i] = BigInt(nexp[i] - dexp[i]);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace stringcone
