#ifndef SIMFAC_SQUARE_CLASS_HPP
#define SIMFAC_SQUARE_CLASS_HPP

#include <iosfwd>
#include <vector>

#include "simfac/rational.hpp"

namespace simfac {

// An element of Q^x / (Q^x)^2 in canonical form: a sign together with a
// strictly increasing list of distinct primes. The representative
// sign * prod(primes) is the unique squarefree integer in the class.
class SquareClass {
  public:
    SquareClass() : sign_(1) {}
    SquareClass(int sign, std::vector<Int> primes);

    int sign() const { return sign_; }
    const std::vector<Int>& primes() const { return primes_; }

    Int representative() const;
    bool is_one() const { return sign_ == 1 && primes_.empty(); }

    SquareClass operator*(const SquareClass& other) const;
    SquareClass inverse() const { return *this; } // every class is 2-torsion

    bool operator==(const SquareClass& other) const {
        return sign_ == other.sign_ && primes_ == other.primes_;
    }
    bool operator!=(const SquareClass& other) const { return !(*this == other); }
    bool operator<(const SquareClass& other) const;

    friend std::ostream& operator<<(std::ostream& os, const SquareClass& c);

  private:
    int sign_;
    std::vector<Int> primes_;
};

// Canonical square class of a nonzero rational. Throws ZeroInput on 0.
SquareClass squarefree_class(const Rat& q);

// True iff a and b differ by a rational square.
bool same_square_class(const Rat& a, const Rat& b);

} // namespace simfac

#endif
