#include "simfac/square_class.hpp"

#include <algorithm>
#include <ostream>

#include "simfac/errors.hpp"

namespace simfac {

SquareClass::SquareClass(int sign, std::vector<Int> primes)
    : sign_(sign), primes_(std::move(primes)) {
    if (sign_ != 1 && sign_ != -1) throw Error("SquareClass sign must be +1 or -1");
    for (size_t i = 0; i < primes_.size(); ++i) {
        if (!is_prime(primes_[i])) throw Error("SquareClass entries must be prime");
        if (i > 0 && !(primes_[i - 1] < primes_[i]))
            throw Error("SquareClass primes must be strictly increasing");
    }
}

Int SquareClass::representative() const {
    Int r = sign_;
    for (const auto& p : primes_) r *= p;
    return r;
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
    // Symmetric difference of supports; shared primes square away.
    std::vector<Int> merged;
    std::set_symmetric_difference(primes_.begin(), primes_.end(),
                                  other.primes_.begin(), other.primes_.end(),
                                  std::back_inserter(merged));
    return SquareClass(sign_ * other.sign_, std::move(merged));
}

bool SquareClass::operator<(const SquareClass& other) const {
    Int a = representative(), b = other.representative();
    Int aa = abs(a), ab = abs(b);
    if (aa != ab) return aa < ab;
    return a < b;
}

std::ostream& operator<<(std::ostream& os, const SquareClass& c) {
    return os << c.representative();
}

SquareClass squarefree_class(const Rat& q) {
    if (q == 0) throw ZeroInput("squarefree_class of zero");
    // q = num/den ~ num*den mod squares.
    Int nd = q.get_num() * q.get_den();
    int sign = nd < 0 ? -1 : 1;
    std::vector<Int> primes;
    for (const auto& [p, e] : factorize(abs(nd)))
        if (e % 2 == 1) primes.push_back(p);
    return SquareClass(sign, std::move(primes));
}

bool same_square_class(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw ZeroInput("same_square_class of zero");
    Rat ratio = a / b;
    ratio.canonicalize();
    return is_square(ratio);
}

} // namespace simfac
