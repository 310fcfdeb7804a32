#include "hasse/place.hpp"

namespace hasse {

Place Place::parse(const std::string& s) {
  if (s == "real" || s == "inf" || s == "infinity" || s == "oo")
    return Place::real();
  Rat q = parse_rational(s);
  if (q.get_den() != 1 || sgn(q) <= 0)
    throw std::invalid_argument("bad place: " + s);
  return Place::finite(Int(q.get_num()));
}

}  // namespace hasse
