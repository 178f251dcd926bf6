#include "lenfun/gamma.hpp"

#include <stdexcept>

namespace lenfun {

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    require_nonnegative();
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

void Rational::require_nonnegative() const {
    if (num_ < 0) throw std::domain_error("Rational: negative value");
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

Int Rational::ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    const Int lhs = num_ * o.den_;
    const Int rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    return num_.get_str() + "/" + den_.get_str();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    const std::string num_part(text.substr(0, slash));
    std::string den_part = slash == std::string_view::npos
                               ? std::string("1")
                               : std::string(text.substr(slash + 1));
    if (num_part.empty() || den_part.empty()) return std::nullopt;
    auto all_digits = [](const std::string& part) {
        for (char c : part) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    if (!all_digits(num_part) || !all_digits(den_part)) return std::nullopt;
    Int num(num_part), den(den_part);
    if (den == 0) return std::nullopt;
    return Rational(num, den);
}

GammaValue GammaValue::infinity() {
    GammaValue v;
    v.finite_.reset();
    return v;
}

const Rational& GammaValue::finite() const {
    if (!finite_) throw std::domain_error("GammaValue: infinite value has no finite payload");
    return *finite_;
}

GammaValue GammaValue::operator+(const GammaValue& o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    return GammaValue(*finite_ + *o.finite_);
}

GammaValue& GammaValue::operator+=(const GammaValue& o) {
    *this = *this + o;
    return *this;
}

GammaValue GammaValue::scaled(const Rational& factor) const {
    if (factor.is_zero()) return zero();
    if (is_infinite()) return infinity();
    return GammaValue(*finite_ * factor);
}

GammaValue GammaValue::scaled(const Int& factor) const {
    if (factor < 0) throw std::domain_error("GammaValue: negative scale");
    return scaled(Rational(factor));
}

std::strong_ordering GammaValue::operator<=>(const GammaValue& o) const {
    if (is_infinite() && o.is_infinite()) return std::strong_ordering::equal;
    if (is_infinite()) return std::strong_ordering::greater;
    if (o.is_infinite()) return std::strong_ordering::less;
    return *finite_ <=> *o.finite_;
}

bool GammaValue::operator==(const GammaValue& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
}

std::string GammaValue::to_string() const {
    return is_infinite() ? "inf" : finite_->to_string();
}

std::optional<GammaValue> GammaValue::parse(std::string_view text) {
    if (text == "inf") return infinity();
    auto q = Rational::parse(text);
    if (!q) return std::nullopt;
    return GammaValue(*q);
}

Multiplicity Multiplicity::infinite() {
    Multiplicity m;
    m.infinite_ = true;
    return m;
}

Multiplicity Multiplicity::of(Int count) {
    if (count <= 0) throw std::domain_error("Multiplicity: count must be positive");
    Multiplicity m;
    m.count_ = std::move(count);
    return m;
}

GammaValue family_sum(const GammaFamily& family) {
    GammaValue total = GammaValue::zero();
    for (const GammaTerm& term : family) {
        if (term.value.is_zero()) continue;
        if (term.value.is_infinite()) return GammaValue::infinity();
        if (term.multiplicity.is_infinite()) return GammaValue::infinity();
        total += term.value.scaled(term.multiplicity.count());
    }
    return total;
}

}  // namespace lenfun
