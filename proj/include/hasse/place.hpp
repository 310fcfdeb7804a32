#pragma once

#include <string>

#include "hasse/numeric.hpp"

namespace hasse {

// A place of Q: the real place or a finite prime. Finite places carry a
// certified prime (deterministic primality check on construction).
class Place {
 public:
  static Place real() { return Place(); }
  static Place finite(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + p.get_str());
    return Place(p);
  }
  // "real"/"inf"/"oo" or a prime literal.
  static Place parse(const std::string& s);

  bool is_real() const { return real_; }
  bool is_finite() const { return !real_; }
  const Int& prime() const {
    if (real_) throw std::logic_error("real place has no prime");
    return p_;
  }

  std::string str() const { return real_ ? "real" : p_.get_str(); }

  friend bool operator==(const Place& a, const Place& b) {
    return a.real_ == b.real_ && (a.real_ || a.p_ == b.p_);
  }
  friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
  // real place sorts first, then primes ascending
  friend bool operator<(const Place& a, const Place& b) {
    if (a.real_ != b.real_) return a.real_;
    if (a.real_) return false;
    return a.p_ < b.p_;
  }

 private:
  Place() : real_(true), p_(0) {}
  explicit Place(const Int& p) : real_(false), p_(p) {}
  bool real_;
  Int p_;
};

}  // namespace hasse
