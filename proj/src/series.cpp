#include "ratpath/series.hpp"

#include <utility>

#include "ratpath/statistics.hpp"

namespace ratpath {

PolyPQR::PolyPQR(long long constant) {
    if (constant != 0) terms_[{0, 0, 0}] = constant;
}

PolyPQR::PolyPQR(BigInt constant) {
    if (constant != 0) terms_[{0, 0, 0}] = std::move(constant);
}

PolyPQR PolyPQR::monomial(int ep, int eq, int er, BigInt coefficient) {
    if (ep < 0 || eq < 0 || er < 0)
        throw Error(Errc::BadArgument, "monomial exponents must be nonnegative");
    PolyPQR out;
    if (coefficient != 0) out.terms_[{ep, eq, er}] = std::move(coefficient);
    return out;
}

bool PolyPQR::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

BigInt PolyPQR::constant_value() const {
    if (!is_constant())
        throw Error(Errc::InternalInvariant, "constant_value on a non-constant polynomial");
    return terms_.empty() ? BigInt(0) : terms_.begin()->second;
}

BigInt PolyPQR::coeff(int ep, int eq, int er) const {
    auto it = terms_.find({ep, eq, er});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void PolyPQR::add_term(const Exponents& exps, const BigInt& coefficient) {
    if (coefficient == 0) return;
    auto [it, fresh] = terms_.emplace(exps, coefficient);
    if (!fresh) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

PolyPQR& PolyPQR::operator+=(const PolyPQR& other) {
    for (const auto& [exps, coefficient] : other.terms_) add_term(exps, coefficient);
    return *this;
}

PolyPQR& PolyPQR::operator-=(const PolyPQR& other) {
    for (const auto& [exps, coefficient] : other.terms_) add_term(exps, -coefficient);
    return *this;
}

PolyPQR PolyPQR::scaled(const BigInt& factor) const {
    PolyPQR out;
    if (factor == 0) return out;
    for (const auto& [exps, coefficient] : terms_) out.terms_[exps] = coefficient * factor;
    return out;
}

PolyPQR PolyPQR::divided_exact(const BigInt& divisor) const {
    if (divisor == 0) throw Error(Errc::BadArgument, "division by zero");
    PolyPQR out;
    for (const auto& [exps, coefficient] : terms_) {
        if (coefficient % divisor != 0)
            throw Error(Errc::InternalInvariant, "coefficient division left a remainder");
        out.terms_[exps] = coefficient / divisor;
    }
    return out;
}

PolyPQR PolyPQR::specialized(int var, const BigInt& value) const {
    PolyPQR out;
    for (const auto& [exps, coefficient] : terms_) {
        BigInt c = coefficient;
        for (int i = 0; i < exps[var]; ++i) c *= value;
        Exponents reduced = exps;
        reduced[var] = 0;
        out.add_term(reduced, c);
    }
    return out;
}

PolyPQR operator*(const PolyPQR& a, const PolyPQR& b) {
    PolyPQR out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

PolyPQR operator+(PolyPQR a, const PolyPQR& b) {
    a += b;
    return a;
}

PolyPQR operator-(PolyPQR a, const PolyPQR& b) {
    a -= b;
    return a;
}

TruncSeries::TruncSeries(int order) : order_(order) {
    if (order < 0) throw Error(Errc::BadArgument, "series order must be nonnegative");
    coeffs_.resize(order + 1);
}

TruncSeries::TruncSeries(int order, PolyPQR constant) : TruncSeries(order) {
    coeffs_[0] = std::move(constant);
}

const PolyPQR& TruncSeries::coeff(int k) const {
    if (k < 0 || k > order_)
        throw Error(Errc::BadArgument, "coefficient index outside the truncation order");
    return coeffs_[k];
}

void TruncSeries::set_coeff(int k, PolyPQR value) {
    if (k < 0 || k > order_)
        throw Error(Errc::BadArgument, "coefficient index outside the truncation order");
    coeffs_[k] = std::move(value);
}

TruncSeries TruncSeries::mul_t(int power) const {
    if (power < 0) throw Error(Errc::BadArgument, "t power must be nonnegative");
    TruncSeries out(order_);
    for (int k = power; k <= order_; ++k) out.coeffs_[k] = coeffs_[k - power];
    return out;
}

TruncSeries TruncSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order_)
        throw Error(Errc::BadArgument, "cannot extend a truncated series");
    TruncSeries out(new_order);
    for (int k = 0; k <= new_order; ++k) out.coeffs_[k] = coeffs_[k];
    return out;
}

namespace {

int common_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order())
        throw Error(Errc::BadArgument, "series truncation orders differ");
    return a.order();
}

}  // namespace

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    const int n = common_order(a, b);
    TruncSeries out(n);
    for (int k = 0; k <= n; ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
    return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    const int n = common_order(a, b);
    TruncSeries out(n);
    for (int k = 0; k <= n; ++k) out.set_coeff(k, a.coeff(k) - b.coeff(k));
    return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int n = common_order(a, b);
    TruncSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

TruncSeries operator*(const PolyPQR& c, const TruncSeries& a) {
    TruncSeries out(a.order());
    for (int k = 0; k <= a.order(); ++k) out.set_coeff(k, c * a.coeff(k));
    return out;
}

TruncSeries operator*(const TruncSeries& a, const PolyPQR& c) { return c * a; }

TruncSeries shift_down(const TruncSeries& s) {
    if (s.order() < 1) throw Error(Errc::BadArgument, "cannot shift a constant-order series");
    if (!s.coeff(0).is_zero())
        throw Error(Errc::PreconditionViolated, "shift_down needs a vanishing constant term");
    TruncSeries out(s.order() - 1);
    for (int k = 1; k <= s.order(); ++k) out.set_coeff(k - 1, s.coeff(k));
    return out;
}

TruncSeries div_by_unit(const TruncSeries& num, const TruncSeries& den) {
    const int n = common_order(num, den);
    if (!(den.coeff(0) == PolyPQR(1)))
        throw Error(Errc::NonUnitConstantTerm, "divisor constant term must be 1");
    TruncSeries out(n);
    for (int k = 0; k <= n; ++k) {
        PolyPQR acc = num.coeff(k);
        for (int j = 1; j <= k; ++j) acc -= den.coeff(j) * out.coeff(k - j);
        out.set_coeff(k, std::move(acc));
    }
    return out;
}

TruncSeries inverse_unit(const TruncSeries& s) {
    return div_by_unit(TruncSeries(s.order(), 1), s);
}

TruncSeries div_exact(const TruncSeries& num, const TruncSeries& den) {
    const int n = common_order(num, den);
    if (!den.coeff(0).is_constant() || den.coeff(0).is_zero())
        throw Error(Errc::NonUnitConstantTerm,
                    "divisor constant term must be a nonzero integer");
    const BigInt b0 = den.coeff(0).constant_value();
    TruncSeries out(n);
    for (int k = 0; k <= n; ++k) {
        PolyPQR acc = num.coeff(k);
        for (int j = 1; j <= k; ++j) acc -= den.coeff(j) * out.coeff(k - j);
        out.set_coeff(k, acc.divided_exact(b0));
    }
    return out;
}

TruncSeries sqrt_unit(const TruncSeries& s) {
    if (!(s.coeff(0) == PolyPQR(1)))
        throw Error(Errc::NonUnitConstantTerm, "sqrt needs constant term 1");
    const int n = s.order();
    TruncSeries out(n, 1);
    for (int k = 1; k <= n; ++k) {
        PolyPQR acc = s.coeff(k);
        for (int j = 1; j < k; ++j) acc -= out.coeff(j) * out.coeff(k - j);
        out.set_coeff(k, acc.divided_exact(2));
    }
    return out;
}

TruncSeries pow(const TruncSeries& base, int exponent) {
    if (exponent < 0) return pow(inverse_unit(base), -exponent);
    TruncSeries out(base.order(), 1);
    for (int i = 0; i < exponent; ++i) out = out * base;
    return out;
}

TruncSeries specialize(const TruncSeries& s, char var, const BigInt& value) {
    int index = 0;
    switch (var) {
        case 'p': index = 0; break;
        case 'q': index = 1; break;
        case 'r': index = 2; break;
        default: throw Error(Errc::BadArgument, "unknown series variable, expected p, q or r");
    }
    TruncSeries out(s.order());
    for (int k = 0; k <= s.order(); ++k) out.set_coeff(k, s.coeff(k).specialized(index, value));
    return out;
}

namespace {

// Every unknown on a right-hand side sits under a factor of t, so each sweep
// fixes one more t-order; order+1 sweeps from the constant series 1 settle
// everything, and one further sweep must change nothing.
template <typename Rhs>
TruncSeries fixed_point(int order, const Rhs& rhs) {
    TruncSeries x(order, 1);
    for (int i = 0; i <= order; ++i) x = rhs(x);
    if (!(rhs(x) == x))
        throw Error(Errc::InternalInvariant, "fixed point moved after order+1 sweeps");
    return x;
}

const PolyPQR kP = PolyPQR::monomial(1, 0, 0);
const PolyPQR kQ = PolyPQR::monomial(0, 1, 0);
const PolyPQR kR = PolyPQR::monomial(0, 0, 1);

}  // namespace

SeriesSystem solve_classical(int order) {
    if (order < 0) throw Error(Errc::BadArgument, "series order must be nonnegative");
    const PolyPQR &p = kP, &q = kQ, &r = kR;
    const TruncSeries one(order, 1);

    const TruncSeries c_r = fixed_point(order, [&](const TruncSeries& x) {
        return one + (r * x).mul_t() + ((x - one) * x).mul_t();
    });
    const TruncSeries c_p = fixed_point(order, [&](const TruncSeries& x) {
        return one + ((p * r) * x).mul_t() + ((x - one) * c_r).mul_t();
    });
    const TruncSeries c_q = fixed_point(order, [&](const TruncSeries& x) {
        return one + ((q * r) * x).mul_t() + (q * ((c_r - one) * x)).mul_t();
    });
    const TruncSeries c = fixed_point(order, [&](const TruncSeries& x) {
        return one + ((p * q * r) * x).mul_t() + (q * ((c_p - one) * c_q)).mul_t();
    });
    return {c, c_p, c_q, c_r};
}

SeriesSystem closed_form_classical(int order) {
    if (order < 0) throw Error(Errc::BadArgument, "series order must be nonnegative");
    const PolyPQR &p = kP, &q = kQ, &r = kR;
    const int work = order + 2;  // headroom for the division by t in C_r

    TruncSeries delta(work, 1);
    delta.set_coeff(1, (r + 1).scaled(-2));
    delta.set_coeff(2, (r - 1) * (r - 1));
    const TruncSeries root = sqrt_unit(delta);

    TruncSeries c_r_num(work, 1);
    c_r_num.set_coeff(1, PolyPQR(1) - r);
    c_r_num = c_r_num - root;
    const TruncSeries c_r =
        div_exact(shift_down(c_r_num), TruncSeries(work - 1, 2)).truncated(order);

    const TruncSeries sd = root.truncated(order);
    auto linear = [order](PolyPQR c0, PolyPQR c1) {
        TruncSeries s(order, std::move(c0));
        if (order >= 1) s.set_coeff(1, std::move(c1));
        return s;
    };

    const TruncSeries den_p = linear(PolyPQR(2) - p, p - p * r) + p * sd;
    const TruncSeries c_p = div_exact(TruncSeries(order, 2), den_p);
    const TruncSeries den_q = linear(PolyPQR(2) - q, q - q * r) + q * sd;
    const TruncSeries c_q = div_exact(TruncSeries(order, 2), den_q);

    TruncSeries c_num(order);
    c_num.set_coeff(0, (p * q).scaled(2) - (p + q).scaled(2) + 4);
    if (order >= 1)
        c_num.set_coeff(1, ((p + q) * (PolyPQR(1) - r)).scaled(2) - (p * q).scaled(2));
    if (order >= 2) c_num.set_coeff(2, ((p * q) * (r * r - r)).scaled(2));
    c_num = c_num + linear((p + q - p * q).scaled(2), (p * q * r).scaled(-2)) * sd;

    const TruncSeries den_c = linear(PolyPQR(1), (p * q * r).scaled(-1)) * den_p * den_q;
    const TruncSeries c = div_exact(c_num, den_c);
    return {c, c_p, c_q, c_r};
}

SeriesSystem solve_fuss(int k, int order) {
    if (k < 1) throw Error(Errc::BadArgument, "stretch factor k must be at least 1");
    if (order < 0) throw Error(Errc::BadArgument, "series order must be nonnegative");
    // The stretched decomposition cuts each vertical component at its k east
    // steps, which needs k >= 2; for k = 1 the square system already is the
    // generating function, and the t-free quotient below genuinely fails.
    if (k == 1) return solve_classical(order);
    const PolyPQR &p = kP, &q = kQ, &r = kR;
    const TruncSeries one(order, 1);
    const TruncSeries r_less_one(order, r - 1);

    const TruncSeries c_r = fixed_point(order, [&](const TruncSeries& x) {
        return one + ((x + r_less_one) * pow(x, k)).mul_t();
    });
    const TruncSeries c_r_km1 = pow(c_r, k - 1);
    const TruncSeries c_p = fixed_point(order, [&](const TruncSeries& x) {
        return one + ((x * c_r + (p * r) * x - c_r) * c_r_km1).mul_t();
    });
    const TruncSeries c_q = fixed_point(order, [&](const TruncSeries& x) {
        return one + (q * (x * (c_r + r_less_one) * c_r_km1)).mul_t();
    });
    const TruncSeries c =
        one + (q * (c_q * (c_p * c_r + (p * r) * c_p - c_r) * pow(c_r, k - 2))).mul_t();

    const TruncSeries num =
        c_r * (((p - 1) * (q - 1)) * c_r + TruncSeries(order, p + q - p * q));
    const TruncSeries den =
        ((p - 1) * c_r - TruncSeries(order, p)) * ((q - 1) * c_r - TruncSeries(order, q));
    if (!(div_by_unit(num, den) == c))
        throw Error(Errc::Mismatch, "quotient expression for C disagrees with the system");
    return {c, c_p, c_q, c_r};
}

TruncSeries extract_F(int order) {
    const TruncSeries c = specialize(solve_classical(order).c, 'r', 1);
    TruncSeries f(order);
    for (int n = 0; n <= order; ++n) {
        PolyPQR row;
        for (const auto& [exps, coefficient] : c.coeff(n).terms())
            if (exps[0] == 1) row += PolyPQR::monomial(0, exps[1], 0, coefficient);
        f.set_coeff(n, std::move(row));
    }
    return f;
}

TruncSeries extract_G(int order) {
    const TruncSeries f = extract_F(order);
    TruncSeries g(order);
    for (int n = 0; n <= order; ++n) {
        BigInt total = 0;
        for (const auto& [exps, coefficient] : f.coeff(n).terms())
            total += exps[1] * coefficient;
        g.set_coeff(n, PolyPQR(total));
    }
    return g;
}

VerifyReport crosscheck_enumeration(int n_max) {
    if (n_max < 0) throw Error(Errc::BadArgument, "bound must be nonnegative");
    VerifyReport report;

    struct Family {
        std::string label;
        int k;
        TruncSeries series;
    };
    const std::vector<Family> families = {
        {"classical", 1, solve_classical(n_max).c},
        {"k=2", 2, solve_fuss(2, n_max).c},
        {"k=3", 3, solve_fuss(3, n_max).c},
    };

    for (const auto& family : families) {
        for (int n = 0; n <= n_max; ++n) {
            PolyPQR expected(1);
            if (n > 0) {
                expected = PolyPQR();
                for_each_path(GridShape{family.k * n, n}, [&](const DyckPath& path) {
                    expected += PolyPQR::monomial(run(path), ret(path), nc(path));
                });
            }
            if (!(expected == family.series.coeff(n))) {
                report.pass = false;
                report.detail = family.label + " t^" + std::to_string(n) + ": series has " +
                                to_string(family.series.coeff(n)) + ", enumeration gives " +
                                to_string(expected);
                return report;
            }
        }
    }
    report.pass = true;
    report.detail =
        "series coefficients match enumeration through t^" + std::to_string(n_max) +
        " (classical, k=2, k=3)";
    return report;
}

std::string to_string(const PolyPQR& poly) {
    if (poly.is_zero()) return "0";
    std::string out;
    for (const auto& [exps, coefficient] : poly.terms()) {
        const bool negative = coefficient < 0;
        const BigInt magnitude = negative ? BigInt(-coefficient) : coefficient;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars;
        constexpr const char* kNames = "pqr";
        for (int i = 0; i < 3; ++i) {
            if (exps[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += kNames[i];
            if (exps[i] > 1) vars += "^" + std::to_string(exps[i]);
        }
        if (vars.empty()) {
            out += magnitude.str();
        } else {
            if (magnitude != 1) {
                out += magnitude.str();
                out += "*";
            }
            out += vars;
        }
    }
    return out;
}

std::string to_string(const TruncSeries& series) {
    std::string out;
    for (int k = 0; k <= series.order(); ++k) {
        const PolyPQR& c = series.coeff(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += to_string(c);
            continue;
        }
        const std::string tpow = k == 1 ? "t" : "t^" + std::to_string(k);
        if (c == PolyPQR(1))
            out += tpow;
        else
            out += "(" + to_string(c) + ")*" + tpow;
    }
    return out.empty() ? "0" : out;
}

}  // namespace ratpath
