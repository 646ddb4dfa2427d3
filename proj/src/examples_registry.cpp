#include "orientseq/examples_registry.hpp"

namespace orientseq {

namespace {

RingSequence seq(int q, std::vector<int> terms) { return RingSequence::from_ints(q, terms); }

std::vector<ExampleRecord> build_registry() {
  // The two order-2 starters everything below is built on.
  const std::vector<int> s_01234{0, 1, 2, 3, 4, 0, 2, 4, 1, 3};
  const std::vector<int> s_02342{0, 2, 3, 4, 2, 1, 0, 3, 1, 4};
  const std::vector<int> s_01402{0, 1, 4, 0, 2, 1, 3, 4, 2, 3};

  std::vector<ExampleRecord> r;

  r.push_back({"sprime_9", "S' over Z_9", Variant::embed, 5, 9, 2, seq(5, s_01234),
               seq(9, {0, 1, 2, 3, 4, 0, 2, 4, 1, 3}), 10, 2});

  r.push_back({"sdprime_9", "S'' = S'||(-S') over Z_9", Variant::s2, 5, 9, 2, seq(5, s_01234),
               seq(9, {0, 1, 2, 3, 4, 0, 2, 4, 1, 3, 0, 8, 7, 6, 5, 0, 7, 5, 8, 6}), 20, 0});

  r.push_back({"sdprime_10", "S'' = S'||(-S') over Z_10", Variant::s2, 5, 10, 2, seq(5, s_01234),
               seq(10, {0, 1, 2, 3, 4, 0, 2, 4, 1, 3, 0, 9, 8, 7, 6, 0, 8, 6, 9, 7}), 20, 0});

  r.push_back({"t_10", "T over Z_10", Variant::t, 5, 10, 2, seq(5, s_01234),
               seq(10, {5, 1, 8, 3, 6, 5, 8, 4, 9, 3}), 10, 2});

  r.push_back({"tprime_10", "T' = T||(-T) over Z_10", Variant::t2, 5, 10, 2, seq(5, s_01234),
               seq(10, {5, 1, 8, 3, 6, 5, 8, 4, 9, 3, 5, 9, 2, 7, 4, 5, 2, 6, 1, 7}), 20, 0});

  r.push_back({"sos_11_2", "U = S''||T' over Z_11", Variant::u, 5, 11, 2, seq(5, s_01234),
               seq(11, {0, 1, 2,  3, 4, 0, 2, 4, 1,  3, 0, 10, 9, 8,  7, 0, 9, 7, 10, 8,
                        6, 1, 9,  3, 7, 5, 9, 4, 10, 3, 5, 10, 2, 8,  4, 6, 2, 7, 1,  8}),
               40, 0});

  r.push_back({"ustar_11", "U* over Z_11 (period 37)", Variant::u_star, 5, 11, 2, seq(5, s_02342),
               seq(11, {0, 2, 1, 0, 3, 1, 4, 0, 9, 8, 7,  9, 10, 0, 8, 10, 7, 6, 2,
                        8, 4, 9, 1, 6, 3, 10, 4, 5, 9, 3, 7, 2,  10, 5, 8, 1, 7}),
               37, 2});

  r.push_back({"u_12", "U over Z_12", Variant::u, 5, 12, 2, seq(5, s_01234),
               seq(12, {0, 1, 2,  3, 4, 0, 2,  4, 1,  3, 0, 11, 10, 9, 8, 0, 10, 8, 11, 9,
                        7, 1, 10, 3, 8, 5, 10, 4, 11, 3, 5, 11, 2,  9, 4, 7, 2,  8, 1,  9}),
               40, 0});

  r.push_back({"uprime_12", "U' (goodified U) over Z_12", Variant::u_prime, 5, 12, 2,
               seq(5, s_01234),
               seq(12, {6, 1, 2,  3, 4, 6, 2,  4, 1,  3, 6, 11, 10, 9, 8, 6, 10, 8, 11, 9,
                        7, 1, 10, 3, 8, 5, 10, 4, 11, 3, 5, 11, 2,  9, 4, 7, 2,  8, 1,  9}),
               40, 0});

  r.push_back({"ustarstar_12", "U** over Z_12 (period 37)", Variant::u_starstar, 5, 12, 2,
               seq(5, s_01402),
               seq(12, {6, 2, 1, 3, 4, 2, 3, 6, 11, 8, 6,  10, 11, 9, 8, 10, 9, 7, 1,
                        8, 5, 10, 1, 9, 4, 10, 3, 5, 11, 4, 7,  2,  11, 3, 8, 2, 9}),
               37, 1});

  return r;
}

}  // namespace

const std::vector<ExampleRecord>& example_registry() {
  static const std::vector<ExampleRecord> registry = build_registry();
  return registry;
}

const ExampleRecord* find_example(const std::string& id) {
  for (const ExampleRecord& r : example_registry())
    if (r.id == id) return &r;
  return nullptr;
}

RingSequence reproduce(const ExampleRecord& record) {
  switch (record.variant) {
    case Variant::embed: return embed_qprime(record.starter, record.n, record.q_prime);
    case Variant::s2: return make_S2(record.starter, record.n, record.q_prime);
    case Variant::t: return make_T(record.starter, record.n, record.q_prime);
    case Variant::t2: return make_T2(record.starter, record.n, record.q_prime);
    case Variant::u: return make_U(record.starter, record.n, record.q_prime);
    case Variant::u_star: return make_U_star(record.q, record.q_prime, record.starter);
    case Variant::u_prime:
      return goodify(make_U(record.starter, record.n, record.q_prime), record.n, record.q,
                     /*force_first_two=*/false);
    case Variant::u_starstar: return make_U_starstar(record.q, record.q_prime, record.starter);
  }
  throw error("unknown example variant");
}

}  // namespace orientseq
