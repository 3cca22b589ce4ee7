#include "afspec/multiplicity.hpp"

#include "afspec/error.hpp"

namespace afspec {

Multiplicity::Multiplicity(BigInt count) : count_(std::move(count)) {
  if (count_ < 0) throw ModelError("multiplicity must be non-negative");
}

Multiplicity::Kind Multiplicity::kind() const {
  if (count_ == 0) return Kind::Zero;
  if (count_ == 1) return Kind::One;
  return Kind::Many;
}

Multiplicity& Multiplicity::operator+=(const Multiplicity& other) {
  count_ += other.count_;
  return *this;
}

Multiplicity& Multiplicity::operator*=(const Multiplicity& other) {
  count_ *= other.count_;
  return *this;
}

std::string Multiplicity::to_string() const {
  switch (kind()) {
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Many: break;
  }
  return "many(" + count_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Multiplicity& m) { return os << m.to_string(); }

}  // namespace afspec
