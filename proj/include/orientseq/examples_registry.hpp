#pragma once

#include <string>
#include <vector>

#include "orientseq/constructions.hpp"
#include "orientseq/ring_sequence.hpp"

namespace orientseq {

/// One registered worked example: the starter it builds on, the pipeline
/// that maps starter to output, and the expected output with its headline
/// numbers. Starters are embedded verbatim so reproduction does not depend
/// on circuit-generation determinism.
struct ExampleRecord {
  std::string id;
  std::string title;
  Variant variant = Variant::embed;
  int q = 0;        // starter modulus
  int q_prime = 0;  // target modulus
  int n = 2;
  RingSequence starter;
  RingSequence expected;
  std::uint64_t expected_period = 0;
  int expected_weight_mod = 0;
};

const std::vector<ExampleRecord>& example_registry();

const ExampleRecord* find_example(const std::string& id);

/// Runs the example's pipeline on its registered starter.
RingSequence reproduce(const ExampleRecord& record);

}  // namespace orientseq
