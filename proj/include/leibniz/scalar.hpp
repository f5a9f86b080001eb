#pragma once

#include "leibniz/error.hpp"

#include <gmpxx.h>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace leibniz {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational
{
  public:
	Rational() = default;
	Rational(long v) : q_(v) {}
	explicit Rational(const mpq_class &v) : q_(v) { q_.canonicalize(); }
	Rational(const BigInt &num, const BigInt &den)
	{
		if (den == 0)
			throw std::domain_error("rational with zero denominator");
		q_ = mpq_class(num, den);
		q_.canonicalize();
	}

	/// Accepts "a" or "a/b" with optional leading sign; b must be non-zero.
	/// Non-canonical spellings ("2/4", "+3") are rejected when `strict`.
	static Rational parse(std::string_view text, bool strict = false)
	{
		auto bad = [&] { return InputError("invalid rational '" + std::string(text) + "'"); };
		if (text.empty())
			throw bad();
		auto slash = text.find('/');
		auto num_txt = text.substr(0, slash);
		auto den_txt = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
		auto valid_int = [](std::string_view s, bool allow_sign) {
			if (!s.empty() && (s[0] == '-' || s[0] == '+') && allow_sign)
				s.remove_prefix(1);
			if (s.empty())
				return false;
			for (char c : s)
				if (c < '0' || c > '9')
					return false;
			return true;
		};
		if (!valid_int(num_txt, true) || !valid_int(den_txt, false))
			throw bad();
		std::string n(num_txt);
		if (n[0] == '+')
			n.erase(0, 1);
		BigInt num(n, 10), den(std::string(den_txt), 10);
		if (den == 0)
			throw bad();
		Rational r(num, den);
		if (strict && r.str() != text)
			throw InputError("non-canonical rational '" + std::string(text) + "' (expected '" + r.str() + "')");
		return r;
	}

	const mpq_class &raw() const { return q_; }
	BigInt numerator() const { return q_.get_num(); }
	BigInt denominator() const { return q_.get_den(); }
	bool is_zero() const { return sgn(q_) == 0; }

	std::string str() const
	{
		if (q_.get_den() == 1)
			return q_.get_num().get_str();
		return q_.get_num().get_str() + "/" + q_.get_den().get_str();
	}

	Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
	Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
	Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
	Rational &operator/=(const Rational &o)
	{
		if (o.is_zero())
			throw std::domain_error("division by zero");
		q_ /= o.q_;
		return *this;
	}

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
	friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.q_)); }
	friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }

  private:
	mpq_class q_;
};

/// Residue modulo the prime P, held as its canonical representative in [0, P).
template <std::uint32_t P>
class Zp
{
	static_assert(P >= 2 && P < (1u << 16), "small primes only");

  public:
	static constexpr std::uint32_t modulus = P;

	constexpr Zp() = default;
	constexpr Zp(long v) : v_(static_cast<std::uint32_t>(((v % long(P)) + long(P)) % long(P))) {}

	/// Integer string in [0, P) when strict, any integer otherwise.
	static Zp parse(std::string_view text, bool strict = false)
	{
		long v = 0;
		auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
		if (ec != std::errc() || ptr != text.data() + text.size())
			throw InputError("invalid residue '" + std::string(text) + "'");
		if (strict && (v < 0 || v >= long(P)))
			throw InputError("residue '" + std::string(text) + "' outside [0," + std::to_string(P) + ")");
		return Zp(v);
	}

	constexpr std::uint32_t value() const { return v_; }
	constexpr bool is_zero() const { return v_ == 0; }
	std::string str() const { return std::to_string(v_); }

	constexpr Zp inverse() const
	{
		if (v_ == 0)
			throw std::domain_error("division by zero");
		// Fermat: a^(P-2)
		std::uint64_t r = 1, b = v_;
		for (std::uint32_t e = P - 2; e; e >>= 1) {
			if (e & 1)
				r = r * b % P;
			b = b * b % P;
		}
		return from_raw(static_cast<std::uint32_t>(r));
	}

	constexpr Zp &operator+=(Zp o) { v_ = (v_ + o.v_) % P; return *this; }
	constexpr Zp &operator-=(Zp o) { v_ = (v_ + P - o.v_) % P; return *this; }
	constexpr Zp &operator*=(Zp o) { v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % P); return *this; }
	constexpr Zp &operator/=(Zp o) { return *this *= o.inverse(); }

	friend constexpr Zp operator+(Zp a, Zp b) { return a += b; }
	friend constexpr Zp operator-(Zp a, Zp b) { return a -= b; }
	friend constexpr Zp operator*(Zp a, Zp b) { return a *= b; }
	friend constexpr Zp operator/(Zp a, Zp b) { return a /= b; }
	friend constexpr Zp operator-(Zp a) { return from_raw((P - a.v_) % P); }
	friend constexpr bool operator==(Zp a, Zp b) = default;

  private:
	static constexpr Zp from_raw(std::uint32_t v)
	{
		Zp z;
		z.v_ = v;
		return z;
	}
	std::uint32_t v_ = 0;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
	static constexpr std::uint32_t characteristic = 0;
	static std::string field_name() { return "Q"; }
};

template <std::uint32_t P>
struct ScalarTraits<Zp<P>> {
	static constexpr std::uint32_t characteristic = P;
	static std::string field_name() { return "F" + std::to_string(P); }
};

template <class S>
concept FieldScalar = requires(S a, S b) {
	{ S(0) };
	{ a + b } -> std::convertible_to<S>;
	{ a - b } -> std::convertible_to<S>;
	{ a * b } -> std::convertible_to<S>;
	{ a / b } -> std::convertible_to<S>;
	{ -a } -> std::convertible_to<S>;
	{ a == b } -> std::convertible_to<bool>;
	{ a.is_zero() } -> std::convertible_to<bool>;
	{ a.str() } -> std::convertible_to<std::string>;
	{ ScalarTraits<S>::characteristic } -> std::convertible_to<std::uint32_t>;
};

template <FieldScalar S>
constexpr std::uint32_t characteristic_of = ScalarTraits<S>::characteristic;

/// Image of a rational under Z_(p) -> F_p. Fails when p divides the denominator.
template <std::uint32_t P>
Zp<P> reduce_mod(const Rational &r)
{
	BigInt den = r.denominator();
	if (mpz_divisible_ui_p(den.get_mpz_t(), P))
		throw MathRejection("denominator of " + r.str() + " is divisible by " + std::to_string(P));
	BigInt num = r.numerator() % P;
	BigInt d = den % P;
	return Zp<P>(num.get_si()) / Zp<P>(d.get_si());
}

} // namespace leibniz
