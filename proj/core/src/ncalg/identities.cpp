#include "ncball/ncalg/identities.hpp"

#include <cmath>
#include <limits>

#include "ncball/ncalg/rewrite.hpp"

namespace ncball::ncalg {

IdentityFailed::IdentityFailed(const std::string& identity, Polynomial residue)
    : Error(ErrorKind::identity_failed,
            "'" + identity + "' leaves residue " + residue.to_string()),
      residue_(std::move(residue)) {}

VerificationReport verify_identities_symbolic(const Presentation& pres) {
  VerificationReport report("symbolic identities for " + pres.name());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto check = [&](const Relation& r, const char* kind) {
    Polynomial residue = normal_form(r.expr, pres);
    report.add(r.name, residue.is_zero(), nan, kind,
               residue.is_zero() ? std::string() : "residue: " + residue.to_string());
  };
  for (const auto& r : pres.relations()) check(r, "relation");
  for (const auto& r : pres.derived_identities()) check(r, "derived identity");
  return report;
}

void require_identities(const Presentation& pres) {
  auto check = [&](const Relation& r) {
    Polynomial residue = normal_form(r.expr, pres);
    if (!residue.is_zero()) throw IdentityFailed(r.name, std::move(residue));
  };
  for (const auto& r : pres.relations()) check(r);
  for (const auto& r : pres.derived_identities()) check(r);
}

}  // namespace ncball::ncalg
