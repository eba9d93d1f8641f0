#pragma once

// Exact truncated power series over the polynomial ring Z[p, q, r].
//
// The generating functions of interest live in Z[p,q,r][[t]]: t marks the
// path size n, p marks run, q marks ret and r marks the number of vertical
// components.  PolyPQR is one sparse polynomial coefficient; TruncSeries
// holds the coefficients of t^0..t^order and truncates every operation at
// that order.  The functional-equation systems are solved by t-adic
// fixed-point iteration, and the radical closed forms are evaluated in the
// same ring so the two can be compared coefficient by coefficient.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ratpath/enumeration.hpp"
#include "ratpath/path.hpp"

namespace ratpath {

class PolyPQR {
public:
    using Exponents = std::array<int, 3>;  // powers of p, q, r
    using TermMap = std::map<Exponents, BigInt>;

    PolyPQR() = default;
    PolyPQR(long long constant);
    PolyPQR(BigInt constant);

    static PolyPQR monomial(int ep, int eq, int er, BigInt coefficient = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    BigInt constant_value() const;
    BigInt coeff(int ep, int eq, int er) const;
    const TermMap& terms() const { return terms_; }

    PolyPQR& operator+=(const PolyPQR& other);
    PolyPQR& operator-=(const PolyPQR& other);
    PolyPQR operator-() const { return scaled(-1); }

    PolyPQR scaled(const BigInt& factor) const;
    PolyPQR divided_exact(const BigInt& divisor) const;
    PolyPQR specialized(int var, const BigInt& value) const;  // var: 0=p, 1=q, 2=r

    friend PolyPQR operator*(const PolyPQR& a, const PolyPQR& b);
    friend bool operator==(const PolyPQR& a, const PolyPQR& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Exponents& exps, const BigInt& coefficient);

    TermMap terms_;
};

PolyPQR operator+(PolyPQR a, const PolyPQR& b);
PolyPQR operator-(PolyPQR a, const PolyPQR& b);

class TruncSeries {
public:
    explicit TruncSeries(int order);          // zero series
    TruncSeries(int order, PolyPQR constant);

    int order() const { return order_; }
    const PolyPQR& coeff(int k) const;
    void set_coeff(int k, PolyPQR value);

    TruncSeries mul_t(int power = 1) const;
    TruncSeries truncated(int new_order) const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

private:
    int order_ = 0;
    std::vector<PolyPQR> coeffs_;
};

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const PolyPQR& c, const TruncSeries& a);
TruncSeries operator*(const TruncSeries& a, const PolyPQR& c);

// t-division; requires a vanishing constant term, drops the order by one.
TruncSeries shift_down(const TruncSeries& s);

TruncSeries inverse_unit(const TruncSeries& s);
TruncSeries div_by_unit(const TruncSeries& num, const TruncSeries& den);

// Division by a series whose constant term is a nonzero integer; every
// coefficient division must come out exact.
TruncSeries div_exact(const TruncSeries& num, const TruncSeries& den);

TruncSeries sqrt_unit(const TruncSeries& s);
TruncSeries pow(const TruncSeries& base, int exponent);
TruncSeries specialize(const TruncSeries& s, char var, const BigInt& value);

// The four series of one functional-equation system, C = C(t,p,q,r) and its
// one- and zero-marker specializations.
struct SeriesSystem {
    TruncSeries c;
    TruncSeries c_p;
    TruncSeries c_q;
    TruncSeries c_r;
};

SeriesSystem solve_classical(int order);
SeriesSystem closed_form_classical(int order);

// Stretched-path system for kn x n shapes.  For k >= 2 the quotient
// expression of C in terms of C_r is asserted on the way out; k = 1 is the
// classical system (the quotient identity does not extend down to it).
SeriesSystem solve_fuss(int k, int order);

// F(t,q): coefficient of p^1 in C(t,p,q,1), the paths with exactly one run.
TruncSeries extract_F(int order);

// G(t): total return count over one-run paths, i.e. dF/dq at q = 1.
TruncSeries extract_G(int order);

// Compares series coefficients against brute-force enumeration of the
// matching square and stretched shapes.
VerifyReport crosscheck_enumeration(int n_max);

std::string to_string(const PolyPQR& poly);
std::string to_string(const TruncSeries& series);

}  // namespace ratpath
