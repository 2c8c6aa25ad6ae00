#ifndef SIMFAC_PLACES_HPP
#define SIMFAC_PLACES_HPP

#include <iosfwd>
#include <set>
#include <vector>

#include "simfac/rational.hpp"

namespace simfac {

// A place of Q: the real place or a finite prime.
class Place {
  public:
    static Place real() { return Place(Int(0), true); }
    static Place finite(const Int& p);

    bool is_real() const { return real_; }
    const Int& prime() const { return p_; }

    bool operator==(const Place& other) const { return real_ == other.real_ && p_ == other.p_; }
    bool operator!=(const Place& other) const { return !(*this == other); }
    bool operator<(const Place& other) const {
        if (real_ != other.real_) return real_; // real place sorts first
        return p_ < other.p_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Place& v);

  private:
    Place(Int p, bool real) : p_(std::move(p)), real_(real) {}
    Int p_;
    bool real_;
};

// The real place, 2, and every odd prime dividing a numerator or
// denominator of one of the values. Outside this set all values are
// local units at an odd place, so local invariants are trivial there.
std::set<Place> bad_places(const std::vector<Rat>& values);

// Hilbert symbol (a,b)_v over the completion at v: +1 iff z^2 = a x^2 + b y^2
// has a nontrivial solution there. Classical valuation/unit formulas; the
// same code path handles every square class including +/-1.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// True iff q is a square in the completion at v.
bool is_local_square(const Rat& q, const Place& v);

} // namespace simfac

#endif
