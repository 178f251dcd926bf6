#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lenfun {

using Int = mpz_class;

/// Exact nonnegative rational, always stored in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int num, Int den);
    Rational(long n) : Rational(Int(n), Int(1)) {}
    explicit Rational(const Int& n) : num_(n), den_(1) { require_nonnegative(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// Largest integer <= *this.
    Int floor() const;
    /// Smallest integer >= *this.
    Int ceil() const;

    Rational operator+(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    /// Exact division; throws std::domain_error if o is zero.
    Rational operator/(const Rational& o) const;

    std::strong_ordering operator<=>(const Rational& o) const;
    bool operator==(const Rational& o) const = default;

    /// Rendered as "p/q", e.g. "0/1", "19/12".
    std::string to_string() const;
    /// Accepts "p" or "p/q" with q > 0; rejects negatives and junk.
    static std::optional<Rational> parse(std::string_view text);

private:
    void require_nonnegative() const;
    Int num_, den_;
};

/// Element of the semigroup of nonnegative rationals extended with an
/// absorbing infinity. Addition never overflows or rounds.
class GammaValue {
public:
    GammaValue() : finite_(Rational()) {}
    GammaValue(Rational q) : finite_(std::move(q)) {}
    GammaValue(long n) : finite_(Rational(n)) {}

    static GammaValue infinity();
    static GammaValue zero() { return GammaValue(); }

    bool is_infinite() const { return !finite_.has_value(); }
    bool is_zero() const { return finite_ && finite_->is_zero(); }
    bool is_finite_positive() const { return finite_ && !finite_->is_zero(); }

    /// Finite payload; throws std::domain_error on infinity.
    const Rational& finite() const;

    GammaValue operator+(const GammaValue& o) const;
    GammaValue& operator+=(const GammaValue& o);

    /// Scaling by a nonnegative rational; 0 * infinity is 0 here.
    GammaValue scaled(const Rational& factor) const;
    /// Scaling by a nonnegative integer.
    GammaValue scaled(const Int& factor) const;

    std::strong_ordering operator<=>(const GammaValue& o) const;
    bool operator==(const GammaValue& o) const;

    std::string to_string() const;
    static std::optional<GammaValue> parse(std::string_view text);

private:
    std::optional<Rational> finite_;  // nullopt encodes infinity
};

/// Multiplicity of a term in a family: a positive integer or infinite.
struct Multiplicity {
    static Multiplicity infinite();
    static Multiplicity of(Int count);

    bool is_infinite() const { return infinite_; }
    const Int& count() const { return count_; }

private:
    bool infinite_ = false;
    Int count_ = 1;
};

struct GammaTerm {
    GammaValue value;
    Multiplicity multiplicity;
};

/// Family with finitely many distinct values, each with a (possibly
/// infinite) multiplicity.
using GammaFamily = std::vector<GammaTerm>;

/// Supremum of all finite subsums of the family: 0 for the empty family,
/// infinite as soon as an infinite value occurs or a positive value has
/// infinite multiplicity, the exact weighted sum otherwise.
GammaValue family_sum(const GammaFamily& family);

}  // namespace lenfun
