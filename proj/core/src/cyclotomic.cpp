#include "seifert/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace seifert {

namespace {

std::vector<Int> poly_divide_exact(const std::vector<Int>& num, const std::vector<Int>& den) {
    // Exact division of integer polynomials with monic divisor.
    std::vector<Int> rem = num;
    std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Int lead = rem[i + den.size() - 1];
        quot[i] = lead;
        if (lead == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= lead * den[j];
    }
    for (const Int& r : rem)
        if (r != 0) throw internal_error("cyclotomic polynomial division not exact");
    return quot;
}

std::vector<Int> compute_cyclotomic_polynomial(long m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
    std::vector<Int> result(m + 1, Int(0));
    result[0] = -1;
    result[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        result = poly_divide_exact(result, cyclotomic_polynomial(d));
    }
    return result;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long m) {
    static std::map<long, std::vector<Int>> cache;
    static std::mutex lock;
    if (m < 1) throw invalid_input("conductor must be positive");
    {
        std::scoped_lock guard(lock);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    std::vector<Int> phi = compute_cyclotomic_polynomial(m);
    std::scoped_lock guard(lock);
    return cache.emplace(m, std::move(phi)).first->second;
}

Cyclotomic::Cyclotomic(long conductor) : m_(conductor), c_(conductor, Rat(0)) {
    if (conductor < 1) throw invalid_input("conductor must be positive");
}

Cyclotomic Cyclotomic::root(long conductor, const Int& power) {
    Cyclotomic z(conductor);
    z.c_[mod_euclid(power, Int(conductor)).get_si()] = 1;
    return z;
}

Cyclotomic Cyclotomic::rational(const Rat& value, long conductor) {
    Cyclotomic z(conductor);
    z.c_[0] = value;
    return z;
}

Cyclotomic Cyclotomic::from_coefficients(long conductor, std::vector<Rat> coefficients) {
    Cyclotomic z(conductor);
    if (coefficients.size() != static_cast<std::size_t>(conductor))
        throw invalid_input("coefficient vector must have one entry per power");
    z.c_ = std::move(coefficients);
    return z;
}

Cyclotomic Cyclotomic::promoted(long big_conductor) const {
    if (big_conductor == m_) return *this;
    if (big_conductor % m_ != 0)
        throw invalid_input("conductor promotion requires a multiple");
    long stretch = big_conductor / m_;
    Cyclotomic z(big_conductor);
    for (long k = 0; k < m_; ++k) z.c_[k * stretch] = c_[k];
    return z;
}

namespace {
long common_conductor(long a, long b) { return std::lcm(a, b); }
}  // namespace

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic z = *this;
    for (auto& x : z.c_) x = -x;
    return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    long m = common_conductor(m_, rhs.m_);
    if (m != m_) *this = promoted(m);
    if (m != rhs.m_) {
        Cyclotomic r = rhs.promoted(m);
        for (long k = 0; k < m; ++k) c_[k] += r.c_[k];
    } else {
        for (long k = 0; k < m; ++k) c_[k] += rhs.c_[k];
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
    long m = common_conductor(m_, rhs.m_);
    if (m != m_) *this = promoted(m);
    if (m != rhs.m_) {
        Cyclotomic r = rhs.promoted(m);
        for (long k = 0; k < m; ++k) c_[k] -= r.c_[k];
    } else {
        for (long k = 0; k < m; ++k) c_[k] -= rhs.c_[k];
    }
    return *this;
}

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
    long m = common_conductor(lhs.m_, rhs.m_);
    const Cyclotomic a = lhs.promoted(m);
    const Cyclotomic b = rhs.promoted(m);
    Cyclotomic z(m);
    for (long i = 0; i < m; ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; j < m; ++j) {
            if (b.c_[j] == 0) continue;
            long k = i + j;
            if (k >= m) k -= m;
            z.c_[k] += a.c_[i] * b.c_[j];
        }
    }
    return z;
}

Cyclotomic& Cyclotomic::scale(const Rat& factor) {
    for (auto& x : c_) x *= factor;
    return *this;
}

Cyclotomic& Cyclotomic::rotate(const Int& power) {
    long shift = mod_euclid(power, Int(m_)).get_si();
    if (shift == 0) return *this;
    std::vector<Rat> out(m_);
    for (long k = 0; k < m_; ++k) {
        long dst = k + shift;
        if (dst >= m_) dst -= m_;
        out[dst] = std::move(c_[k]);
    }
    c_ = std::move(out);
    return *this;
}

Cyclotomic Cyclotomic::canonical() const {
    const std::vector<Int>& phi = cyclotomic_polynomial(m_);
    long degree = static_cast<long>(phi.size()) - 1;  // = phi(m)
    Cyclotomic z = *this;
    for (long d = m_ - 1; d >= degree; --d) {
        if (z.c_[d] == 0) continue;
        Rat lead = std::move(z.c_[d]);
        z.c_[d] = 0;
        for (long j = 0; j < degree; ++j) z.c_[d - degree + j] -= lead * Rat(phi[j]);
    }
    return z;
}

bool Cyclotomic::is_zero() const {
    Cyclotomic z = canonical();
    for (const auto& x : z.c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    return (*this - rhs).is_zero();
}

bool Cyclotomic::is_rational() const {
    Cyclotomic z = canonical();
    for (long k = 1; k < m_; ++k)
        if (z.c_[k] != 0) return false;
    return true;
}

Rat Cyclotomic::to_rational() const {
    Cyclotomic z = canonical();
    for (long k = 1; k < m_; ++k)
        if (z.c_[k] != 0)
            throw internal_error("cyclotomic value is not rational");
    return z.c_[0];
}

Cyclotomic Cyclotomic::inverse() const {
    using Poly = std::vector<Rat>;
    auto degree_of = [](const Poly& p) {
        long d = static_cast<long>(p.size()) - 1;
        while (d >= 0 && p[d] == 0) --d;
        return d;
    };

    Cyclotomic canon = canonical();
    Poly p(canon.c_.begin(), canon.c_.end());
    if (degree_of(p) < 0) throw invalid_input("inverse of zero cyclotomic value");

    const std::vector<Int>& phi_int = cyclotomic_polynomial(m_);
    Poly r0(phi_int.begin(), phi_int.end());
    Poly r1 = p;
    // Extended Euclid against Phi_m, tracking only the p-cofactor: Phi_m is
    // irreducible over Q, so the gcd is a nonzero constant.
    Poly t0{Rat(0)}, t1{Rat(1)};
    while (true) {
        long d1 = degree_of(r1);
        if (d1 < 0) throw internal_error("vanishing remainder while inverting a nonzero value");
        if (d1 == 0) break;
        long d0 = degree_of(r0);
        Poly q(d0 - d1 + 1, Rat(0));
        Poly rem = r0;
        for (long i = d0 - d1; i >= 0; --i) {
            Rat coeff = rem[i + d1] / r1[d1];
            q[i] = coeff;
            if (coeff == 0) continue;
            for (long j = 0; j <= d1; ++j) rem[i + j] -= coeff * r1[j];
        }
        Poly t2(std::max(t0.size(), q.size() + t1.size()), Rat(0));
        for (std::size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < t1.size(); ++j) t2[i + j] -= q[i] * t1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rat unit = r1[0];
    Cyclotomic result(m_);
    for (std::size_t i = 0; i < t1.size() && i < static_cast<std::size_t>(m_); ++i)
        result.c_[i] = t1[i] / unit;
    return result;
}

Cyclotomic Cyclotomic::galois(const Int& s) const {
    if (gcd(mod_euclid(s, Int(m_)), Int(m_)) != 1)
        throw invalid_input("Galois exponent must be coprime to the conductor");
    Cyclotomic z(m_);
    for (long k = 0; k < m_; ++k) {
        if (c_[k] == 0) continue;
        z.c_[mod_euclid(s * k, Int(m_)).get_si()] += c_[k];
    }
    return z;
}

}  // namespace seifert
