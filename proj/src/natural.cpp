#include "fiblucas/natural.hpp"

#include <ostream>
#include <stdexcept>

namespace fiblucas {

namespace {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "mpz_class word conversions assume an LP64 target");

}  // namespace

Natural::Natural(std::uint64_t v) : v_(static_cast<unsigned long>(v)) {}

Natural Natural::from_decimal(const std::string& digits) {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("not a nonnegative decimal integer: '" + digits + "'");
    }
    return Natural(mpz_class(digits, 10));
}

Natural& Natural::operator+=(const Natural& rhs) {
    v_ += rhs.v_;
    return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
    v_ *= rhs.v_;
    return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
    if (cmp(v_, rhs.v_) < 0) {
        throw std::domain_error("natural subtraction would go negative");
    }
    v_ -= rhs.v_;
    return *this;
}

bool operator==(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) == 0; }

std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::uint64_t Natural::mod(std::uint64_t m) const {
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    return mpz_fdiv_ui(v_.get_mpz_t(), static_cast<unsigned long>(m));
}

bool Natural::fits_u64() const { return mpz_fits_ulong_p(v_.get_mpz_t()) != 0; }

std::uint64_t Natural::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("natural does not fit in 64 bits");
    return mpz_get_ui(v_.get_mpz_t());
}


std::string Natural::to_string() const { return v_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

}  // namespace fiblucas
