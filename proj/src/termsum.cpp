#include "harmonic/termsum.hpp"

#include <cmath>
#include <deque>
#include <mutex>

namespace harmonic::closedform {

namespace {
constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void overflow() {
    throw DomainError("termsum: exact integer coefficient overflow");
}
}  // namespace

Int128 Int128::operator+(Int128 o) const {
    __int128 r;
    if (__builtin_add_overflow(v_, o.v_, &r)) overflow();
    return raw(r);
}

Int128 Int128::operator-(Int128 o) const {
    __int128 r;
    if (__builtin_sub_overflow(v_, o.v_, &r)) overflow();
    return raw(r);
}

Int128 Int128::operator*(Int128 o) const {
    __int128 r;
    if (__builtin_mul_overflow(v_, o.v_, &r)) overflow();
    return raw(r);
}

LambdaPoly::LambdaPoly(std::vector<Int128> coefficients) : coef_(std::move(coefficients)) {
    normalize();
}

LambdaPoly LambdaPoly::constant(long long c) {
    if (c == 0) return LambdaPoly{};
    return LambdaPoly(std::vector<Int128>{Int128(c)});
}

void LambdaPoly::normalize() {
    while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

LambdaPoly LambdaPoly::operator+(const LambdaPoly& o) const {
    std::vector<Int128> out(std::max(coef_.size(), o.coef_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        Int128 s;
        if (i < coef_.size()) s = s + coef_[i];
        if (i < o.coef_.size()) s = s + o.coef_[i];
        out[i] = s;
    }
    return LambdaPoly(std::move(out));
}

LambdaPoly LambdaPoly::scaled(Int128 s) const {
    if (s.is_zero()) return LambdaPoly{};
    std::vector<Int128> out(coef_.size());
    for (size_t i = 0; i < coef_.size(); ++i) out[i] = coef_[i] * s;
    return LambdaPoly(std::move(out));
}

LambdaPoly LambdaPoly::shifted() const {
    if (coef_.empty()) return LambdaPoly{};
    std::vector<Int128> out(coef_.size() + 1);
    for (size_t i = 0; i < coef_.size(); ++i) out[i + 1] = coef_[i];
    return LambdaPoly(std::move(out));
}

Complex LambdaPoly::eval(Complex w) const {
    Complex acc = 0.0;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * w + it->to_double();
    return acc;
}

TermSum TermSum::one() {
    TermSum t;
    t.add_term(0, 0, LambdaPoly::constant(1));
    return t;
}

void TermSum::add_term(int csch_pow, int coth_pow, const LambdaPoly& p) {
    if (p.is_zero()) return;
    auto key = std::make_pair(csch_pow, coth_pow);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, p);
        return;
    }
    LambdaPoly sum = it->second + p;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

TermSum differentiate(const TermSum& t) {
    TermSum out;
    for (const auto& [kj, p] : t.terms()) {
        auto [k, j] = kj;
        out.add_term(k, j, p.shifted());                                 // from e^{i lambda r}
        if (k > 0) out.add_term(k, j + 1, p.scaled(Int128(-k)));         // from csch^k
        if (j > 0) out.add_term(k + 2, j - 1, p.scaled(Int128(-j)));     // from coth^j
    }
    return out;
}

TermSum apply_D(const TermSum& t) {
    TermSum d = differentiate(t);
    TermSum out;
    for (const auto& [kj, p] : d.terms()) out.add_term(kj.first + 1, kj.second, p);
    return out;
}

Complex eval_term_sum(const TermSum& t, Complex lambda, double r) {
    if (!(r > 0.0)) throw DomainError("eval_term_sum: r must be positive");
    Complex w = Complex(0.0, 1.0) * lambda;
    double csch = 1.0 / std::sinh(r);
    double coth = 1.0 / std::tanh(r);
    Complex sum = 0.0;
    for (const auto& [kj, p] : t.terms()) {
        double factor = std::pow(csch, kj.first) * std::pow(coth, kj.second);
        sum += p.eval(w) * factor;
    }
    return std::exp(w * r) * sum;
}

const TermSum& iterated_terms(int m) {
    if (m < 0) throw DomainError("iterated_terms: m must be nonnegative");
    static std::mutex mu;
    // deque: growth never invalidates references handed out earlier
    static std::deque<TermSum> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.push_back(TermSum::one());
    while (static_cast<int>(cache.size()) <= m) cache.push_back(apply_D(cache.back()));
    return cache[m];
}

Complex odd_constant(int m, Complex lambda) {
    double sign = (m % 2 == 0) ? -1.0 : 1.0;
    return sign / (Complex(0.0, 2.0) * lambda * std::pow(2.0 * kPi, m));
}

Complex odd_resolvent(int m, Complex lambda, double r) {
    if (m < 0) throw DomainError("odd_resolvent: m must be nonnegative");
    if (std::abs(lambda) < 1e-12) throw PoleError("odd_resolvent: lambda = 0");
    if (!(r > 0.0)) throw DomainError("odd_resolvent: r must be positive");
    return odd_constant(m, lambda) * eval_term_sum(iterated_terms(m), lambda, r);
}

}  // namespace harmonic::closedform
