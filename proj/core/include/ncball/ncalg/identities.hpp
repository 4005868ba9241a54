#pragma once

#include "ncball/error.hpp"
#include "ncball/ncalg/polynomial.hpp"
#include "ncball/ncalg/presentation.hpp"
#include "ncball/report.hpp"

namespace ncball::ncalg {

/// Reduces every relation and derived identity of pres to normal form.
/// An entry passes iff its residue is exactly zero; failing entries carry
/// the residue in CheckEntry::detail.
VerificationReport verify_identities_symbolic(const Presentation& pres);

class IdentityFailed : public Error {
 public:
  IdentityFailed(const std::string& identity, Polynomial residue);
  const Polynomial& residue() const noexcept { return residue_; }

 private:
  Polynomial residue_;
};

/// Same checks as verify_identities_symbolic but throws IdentityFailed on
/// the first nonzero residue.
void require_identities(const Presentation& pres);

}  // namespace ncball::ncalg
