#pragma once

#include <optional>
#include <string>

#include "wlab/bigint.hpp"
#include "wlab/modring.hpp"

namespace wlab {

enum class Status {
  Holds,          // residual valuation reaches the required exponent
  Fails,          // a stated congruence is violated
  Identity,       // both sides agree as exact integers
  NotApplicable,  // prime outside the statement's range
  Probe,          // informational: computed and recorded, never a pass/fail claim
};

const char* to_string(Status s);

struct CongruenceReport {
  std::string check;
  BigInt p;
  int required_exponent = 0;
  int working_exponent = 0;
  int residual_valuation = 0;  // v_p(lhs - rhs), saturated at working_exponent
  bool holds = false;
  Status status = Status::NotApplicable;
  std::optional<BigInt> lhs;
  std::optional<BigInt> rhs;
  std::string note;
};

// Compares two residues of the same ring; the ring exponent is the working exponent.
CongruenceReport compare(std::string check, const Residue& lhs, const Residue& rhs, int required_exponent);

// lhs and rhs are exact integers; equal values give Status::Identity.
CongruenceReport compare_exact(std::string check, const BigInt& p, const BigInt& lhs, const BigInt& rhs,
                               int required_exponent, int working_exponent);

CongruenceReport not_applicable(std::string check, const BigInt& p, int required_exponent, std::string why);

// Same measurement, but tagged as informational.
CongruenceReport as_probe(CongruenceReport r);

}  // namespace wlab
