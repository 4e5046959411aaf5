#include "wlab/report.hpp"

#include <algorithm>
#include <utility>

#include "wlab/error.hpp"

namespace wlab {

const char* to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Identity: return "identity";
    case Status::NotApplicable: return "not-applicable";
    case Status::Probe: return "probe";
  }
  return "unknown";
}

CongruenceReport compare(std::string check, const Residue& lhs, const Residue& rhs, int required_exponent) {
  if (!(lhs.ring() == rhs.ring())) throw Error(ErrorCode::RingMismatch, check + ": sides computed in different rings");
  CongruenceReport r;
  r.check = std::move(check);
  r.p = lhs.ring().p();
  r.required_exponent = required_exponent;
  r.working_exponent = lhs.ring().exponent();
  r.residual_valuation = (lhs - rhs).valuation();
  r.holds = r.residual_valuation >= required_exponent;
  r.status = r.holds ? Status::Holds : Status::Fails;
  r.lhs = lhs.value();
  r.rhs = rhs.value();
  return r;
}

CongruenceReport compare_exact(std::string check, const BigInt& p, const BigInt& lhs, const BigInt& rhs,
                               int required_exponent, int working_exponent) {
  CongruenceReport r;
  r.check = std::move(check);
  r.p = p;
  r.required_exponent = required_exponent;
  r.working_exponent = working_exponent;
  r.residual_valuation = valuation(BigInt(lhs - rhs), p, working_exponent);
  r.holds = r.residual_valuation >= required_exponent;
  r.status = lhs == rhs ? Status::Identity : (r.holds ? Status::Holds : Status::Fails);
  r.lhs = lhs;
  r.rhs = rhs;
  return r;
}

CongruenceReport not_applicable(std::string check, const BigInt& p, int required_exponent, std::string why) {
  CongruenceReport r;
  r.check = std::move(check);
  r.p = p;
  r.required_exponent = required_exponent;
  r.status = Status::NotApplicable;
  r.note = std::move(why);
  return r;
}

CongruenceReport as_probe(CongruenceReport r) {
  if (r.status != Status::NotApplicable) r.status = Status::Probe;
  return r;
}

}  // namespace wlab
