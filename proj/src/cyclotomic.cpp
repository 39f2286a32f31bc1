#include "hopper/cyclotomic.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hopper {

int euler_phi(int N) {
    int result = N, n = N;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// poly helpers on ascending coefficient vectors
std::vector<Int> poly_div_exact(const std::vector<Int>& num, const std::vector<Int>& den) {
    // den monic; division must be exact
    std::vector<Int> rem = num;
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    if (dn < dd) throw std::logic_error("poly_div_exact: degree underflow");
    std::vector<Int> q(static_cast<size_t>(dn - dd) + 1);
    for (int k = dn - dd; k >= 0; --k) {
        Int coef = rem[static_cast<size_t>(k + dd)];
        q[static_cast<size_t>(k)] = coef;
        if (coef == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= coef * den[static_cast<size_t>(j)];
    }
    for (const Int& r : rem)
        if (r != 0) throw std::logic_error("poly_div_exact: inexact division");
    return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int N) {
    if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N >= 1");
    static std::map<int, std::vector<Int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    std::function<std::vector<Int>(int)> phi_of = [&](int n) -> std::vector<Int> {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        std::vector<Int> num(static_cast<size_t>(n) + 1);
        num[0] = -1;
        num[static_cast<size_t>(n)] = 1;  // x^n - 1
        for (int d = 1; d < n; ++d)
            if (n % d == 0) num = poly_div_exact(num, phi_of(d));
        cache.emplace(n, num);
        return num;
    };
    return phi_of(N);
}

// Per-order precomputed tables: Phi_N and reduced powers zeta^m, m in [0, N).
class CycTables {
public:
    static const CycTables& get(int N) {
        static std::map<int, CycTables> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(N);
        if (it == cache.end()) it = cache.emplace(N, CycTables(N)).first;
        return it->second;
    }

    int N;
    int phi;
    std::vector<Int> poly;                    // Phi_N ascending, monic
    std::vector<std::vector<Int>> zeta_pows;  // zeta^m reduced, m in [0, N)

private:
    explicit CycTables(int order) : N(order) {
        poly = cyclotomic_polynomial(N);
        phi = static_cast<int>(poly.size()) - 1;
        zeta_pows.resize(static_cast<size_t>(N));
        // x^m mod Phi_N by repeated shift-and-reduce
        std::vector<Int> cur(static_cast<size_t>(phi));
        cur[0] = 1;
        for (int m = 0; m < N; ++m) {
            zeta_pows[static_cast<size_t>(m)] = cur;
            // multiply by x
            std::vector<Int> next(static_cast<size_t>(phi) + 1);
            for (int i = 0; i < phi; ++i) next[static_cast<size_t>(i) + 1] = cur[static_cast<size_t>(i)];
            Int lead = next[static_cast<size_t>(phi)];
            if (lead != 0)
                for (int i = 0; i < phi; ++i)
                    next[static_cast<size_t>(i)] -= lead * poly[static_cast<size_t>(i)];
            next.resize(static_cast<size_t>(phi));
            cur = std::move(next);
        }
    }
};

Cyc::Cyc(int N) : order_(N) {
    if (N < 1) throw std::invalid_argument("Cyc: order >= 1");
    c_.assign(static_cast<size_t>(CycTables::get(N).phi), Int(0));
}

Cyc Cyc::integer(int N, const Int& v) {
    Cyc out(N);
    out.c_[0] = v;
    return out;
}

Cyc Cyc::zeta(int N) { return zeta_pow(N, 1); }

Cyc Cyc::zeta_pow(int N, long k) {
    const CycTables& t = CycTables::get(N);
    long m = k % N;
    if (m < 0) m += N;
    Cyc out(N);
    out.c_ = t.zeta_pows[static_cast<size_t>(m)];
    return out;
}

bool Cyc::is_zero() const {
    for (const Int& v : c_)
        if (v != 0) return false;
    return true;
}

bool Cyc::operator<(const Cyc& o) const {
    if (order_ != o.order_) return order_ < o.order_;
    return c_ < o.c_;
}

Cyc Cyc::operator+(const Cyc& o) const {
    if (order_ != o.order_) throw std::invalid_argument("Cyc: order mismatch");
    Cyc out(order_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

Cyc Cyc::operator-(const Cyc& o) const {
    if (order_ != o.order_) throw std::invalid_argument("Cyc: order mismatch");
    Cyc out(order_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

Cyc Cyc::operator-() const {
    Cyc out(order_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

Cyc Cyc::from_raw(int N, std::vector<Int> raw) {
    const CycTables& t = CycTables::get(N);
    const int phi = t.phi;
    // reduce degree >= phi terms with the monic Phi_N
    for (int d = static_cast<int>(raw.size()) - 1; d >= phi; --d) {
        Int lead = raw[static_cast<size_t>(d)];
        if (lead == 0) continue;
        for (int j = 0; j <= phi; ++j)
            raw[static_cast<size_t>(d - phi + j)] -= lead * t.poly[static_cast<size_t>(j)];
    }
    raw.resize(static_cast<size_t>(phi));
    Cyc out(N);
    out.c_ = std::move(raw);
    return out;
}

Cyc Cyc::operator*(const Cyc& o) const {
    if (order_ != o.order_) throw std::invalid_argument("Cyc: order mismatch");
    std::vector<Int> raw(c_.size() + o.c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) raw[i + j] += c_[i] * o.c_[j];
    }
    return from_raw(order_, std::move(raw));
}

Cyc Cyc::operator*(const Int& k) const {
    Cyc out(order_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * k;
    return out;
}

Cyc Cyc::galois(long k) const {
    long m = k % order_;
    if (m < 0) m += order_;
    if (std::gcd(m, static_cast<long>(order_)) != 1)
        throw std::invalid_argument("Cyc::galois: exponent not coprime to order");
    const CycTables& t = CycTables::get(order_);
    Cyc acc(order_);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        size_t idx = static_cast<size_t>((static_cast<long>(j) * m) % order_);
        const std::vector<Int>& zp = t.zeta_pows[idx];
        for (size_t i = 0; i < acc.c_.size(); ++i) acc.c_[i] += c_[j] * zp[i];
    }
    return acc;
}

Cyc Cyc::conj() const {
    if (order_ <= 2) return *this;
    return galois(order_ - 1);
}

Cyc Cyc::pow(unsigned long e) const {
    Cyc acc = Cyc::integer(order_, 1);
    Cyc base = *this;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return acc;
}

std::optional<Cyc> Cyc::divide_exact(const Cyc& o) const {
    if (order_ != o.order_) throw std::invalid_argument("Cyc: order mismatch");
    if (o.is_zero()) return std::nullopt;
    // numerator = this * prod of the other Galois conjugates of o;
    // denominator = field norm of o (a nonzero rational integer).
    Cyc prod = Cyc::integer(order_, 1);
    for (int k = 2; k <= order_; ++k) {
        if (std::gcd(k, order_) != 1) continue;
        prod = prod * o.galois(k);
    }
    Cyc norm = o * prod;
    for (size_t i = 1; i < norm.c_.size(); ++i)
        if (norm.c_[i] != 0) throw std::logic_error("Cyc: norm is not rational");
    Int d = norm.c_[0];
    if (d == 0) return std::nullopt;
    Cyc num = *this * prod;
    Cyc out(order_);
    for (size_t i = 0; i < num.c_.size(); ++i) {
        if (num.c_[i] % d != 0) return std::nullopt;
        out.c_[i] = num.c_[i] / d;
    }
    return out;
}

std::complex<double> Cyc::embed() const {
    const double theta = 2.0 * M_PI / order_;
    std::complex<double> acc(0.0, 0.0);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        double v = static_cast<double>(c_[j]);
        acc += v * std::polar(1.0, theta * static_cast<double>(j));
    }
    return acc;
}

int Cyc::sign_real() const {
    if (*this != this->conj()) throw std::invalid_argument("sign_real: element is not real");
    if (is_zero()) return 0;
    // Rung 1: double evaluation with a crude coefficient-scaled error bound.
    const std::complex<double> v = embed();
    double coeff_scale = 0.0;
    for (const Int& ci : c_) {
        double a = std::fabs(static_cast<double>(ci));
        coeff_scale = std::max(coeff_scale, a);
    }
    const double err1 = coeff_scale * c_.size() * 1e-13;
    if (std::fabs(v.real()) > err1 + 1e-300) return v.real() > 0 ? 1 : -1;
    // Rung 2: 100-decimal-digit floats.
    using BF = boost::multiprecision::cpp_bin_float_100;
    const BF pi = 4 * atan(BF(1));
    BF re = 0;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        BF ang = 2 * pi * static_cast<long>(j) / order_;
        re += BF(c_[j].str()) * cos(ang);
    }
    BF bound = BF(coeff_scale) * static_cast<int>(c_.size()) *
               boost::multiprecision::pow(BF(10), -90);
    if (boost::multiprecision::abs(re) > bound) return re > 0 ? 1 : -1;
    throw std::logic_error("sign_real: could not separate nonzero value from zero");
}

std::string Cyc::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

}  // namespace hopper
