#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addlaw/addlaws.hpp"

namespace addlaw {

// Result of scanning a law for pairs where every coordinate vanishes. In
// pair-scan mode every ordered pair of rational points is checked, so the
// verdict is unconditional. In difference mode only the pairs (T, identity)
// are enumerated and each hit is confirmed on sampled pairs of its fiber;
// this relies on the exceptional set being a union of difference fibers,
// which the scan spot-checks rather than assumes blindly.
struct ExceptionalReport {
  uint64_t pairs_scanned = 0;
  uint64_t exceptional_count = 0;
  bool difference_mode = false;
  std::vector<std::pair<Point, Point>> examples;  // first few failing pairs
  std::vector<Point> differences;                 // distinct P - Q, canonical order
  std::vector<uint64_t> fiber_counts;             // failing pairs per difference

  bool complete() const { return exceptional_count == 0; }
  Json to_json() const;
};

// Certifies k-completeness of the law over its own field: full pair scan
// when |E|^2 <= 2^23, difference mode beyond that.
ExceptionalReport certify_k_complete(const AdditionLaw& law, size_t max_examples = 8);

// A pair over an extension field where the law is undefined, at the smallest
// extension degree in [2, max_degree] where one exists.
struct IncompletenessWitness {
  unsigned degree = 0;
  Point P, Q;
  Point difference;
  Json to_json() const;
};

std::optional<IncompletenessWitness> incompleteness_witness(const AdditionLaw& law,
                                                            unsigned max_degree);

// ---- certificates ----
//
// A certificate is a JSON document stamped with the tool name/version, a
// kind, the seed that reproduces it, and a digest over its canonical bytes.
// Identical inputs and seeds produce byte-identical certificates.

Json new_certificate(const std::string& kind, uint64_t seed);
// SHA-256 over the canonical serialization with the digest field removed.
std::string certificate_digest(const Json& cert);
void seal_certificate(Json& cert);
std::string certificate_to_bytes(const Json& cert);

}  // namespace addlaw
