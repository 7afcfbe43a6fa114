#include "idensity/ideal.hpp"

#include "idensity/error.hpp"

namespace idensity {

Ideal Ideal::parse(std::string_view name) {
  if (name == "fin") return fin();
  if (name == "d") return density_zero();
  throw Error(ErrorCode::Parse, "unknown ideal '" + std::string(name) + "' (expected fin or d)");
}

bool Ideal::contains(const NormalForm& form) const {
  if (kind_ == Kind::Fin) return is_finite(form);
  return natural_density(form) == 0;
}

bool Ideal::contains(const IndexSet& set) const { return contains(normal_form(set)); }

bool Ideal::in_filter(const IndexSet& set) const { return contains(~set); }

}  // namespace idensity
