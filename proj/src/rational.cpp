#include "signalling/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "signalling/errors.hpp"

namespace signalling {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad_literal(std::string_view text, const char* why) {
    throw ParseError("invalid rational literal '" + std::string(text) + "': " + why);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad_literal(text, "empty");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    mpq_class result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_literal(text, "expected a/b with unsigned integers");
        mpz_class d{std::string(den), 10};
        if (d == 0) bad_literal(text, "zero denominator");
        result = mpq_class(mpz_class(std::string(num), 10), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad_literal(text, "no digits");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            bad_literal(text, "malformed decimal");
        mpz_class scale = 1;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        result = mpq_class(digits, scale);
    } else {
        if (!all_digits(s)) bad_literal(text, "not a number");
        result = mpq_class(mpz_class(std::string(s), 10));
    }
    result.canonicalize();
    if (negative) result = -result;
    return Rational(std::move(result));
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

int Rational::sign() const { return sgn(value_); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

double Rational::to_double() const { return value_.get_d(); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.value_ == 0) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace signalling
