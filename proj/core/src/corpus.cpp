#include "ramiq/corpus.hpp"

#include <array>
#include <utility>

namespace ramiq {

namespace {

constexpr const char* kP1Antipode = R"({
  "name": "p1_antipode",
  "group": {"kind": "cyclic", "n": 2},
  "ambient": {"dim": 1, "genus": 0},
  "sheaf": {"kind": "general", "rank": 1, "degree": 0},
  "strata": [
    {
      "id": "P0", "dim": 0, "stabilizer": [0, 1],
      "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1}],
      "sheaf": [{"character": {"0": [1, 0], "1": [1, 0]}, "rank": 1}]
    },
    {
      "id": "Pinf", "dim": 0, "stabilizer": [0, 1],
      "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1}],
      "sheaf": [{"character": {"0": [1, 0], "1": [1, 0]}, "rank": 1}]
    }
  ]
})";

constexpr const char* kGenus2Hyperelliptic = R"({
  "name": "genus2_hyperelliptic",
  "group": {"kind": "cyclic", "n": 2},
  "ambient": {"dim": 1, "genus": 2},
  "sheaf": {"kind": "general", "rank": 1, "degree": 2},
  "strata": [
    {
      "id": "W1", "dim": 0, "stabilizer": [0, 1],
      "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1}],
      "sheaf": [{"character": {"0": [1, 0], "1": [2, 1]}, "rank": 1}]
    },
    {
      "id": "W2", "dim": 0, "stabilizer": [0, 1],
      "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1}],
      "sheaf": [{"character": {"0": [1, 0], "1": [2, 1]}, "rank": 1}]
    },
    {
      "id": "W3", "dim": 0, "stabilizer": [0, 1],
      "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1}],
      "sheaf": [{"character": {"0": [1, 0], "1": [2, 1]}, "rank": 1}]
    },
    {
      "id": "W4", "dim": 0, "stabilizer": [0, 1],
      "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1}],
      "sheaf": [{"character": {"0": [1, 0], "1": [2, 1]}, "rank": 1}]
    },
    {
      "id": "W5", "dim": 0, "stabilizer": [0, 1],
      "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1}],
      "sheaf": [{"character": {"0": [1, 0], "1": [2, 1]}, "rank": 1}]
    },
    {
      "id": "W6", "dim": 0, "stabilizer": [0, 1],
      "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1}],
      "sheaf": [{"character": {"0": [1, 0], "1": [2, 1]}, "rank": 1}]
    }
  ]
})";

constexpr const char* kP1xP1Involution = R"({
  "name": "p1xp1_involution",
  "group": {"kind": "cyclic", "n": 2},
  "ambient": {"dim": 2, "euler": 1, "chi_O": 1, "K2": 8},
  "sheaf": {"kind": "general", "rank": 1},
  "strata": [
    {
      "id": "C0", "dim": 1, "stabilizer": [0, 1],
      "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1, "degree": 0}],
      "sheaf": [{"character": {"0": [1, 0], "1": [1, 0]}, "rank": 1, "degree": 0}],
      "genus": 0, "KC": -2, "C2": 0
    },
    {
      "id": "Cinf", "dim": 1, "stabilizer": [0, 1],
      "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1, "degree": 0}],
      "sheaf": [{"character": {"0": [1, 0], "1": [1, 0]}, "rank": 1, "degree": 0}],
      "genus": 0, "KC": -2, "C2": 0
    }
  ]
})";

constexpr const char* kKlein4Surface = R"({
  "name": "klein4_surface",
  "group": {"kind": "abelian_product", "orders": [2, 2]},
  "ambient": {"dim": 2, "euler": 1, "chi_O": 1, "K2": 8},
  "sheaf": {"kind": "general", "rank": 1},
  "strata": [
    {
      "id": "P00", "dim": 0, "stabilizer": [0, 1, 2, 3],
      "normal": [
        {"character": {"0": [1, 0], "1": [1, 0], "2": [2, 1], "3": [2, 1]}, "multiplicity": 1},
        {"character": {"0": [1, 0], "1": [2, 1], "2": [1, 0], "3": [2, 1]}, "multiplicity": 1}
      ],
      "sheaf": [{"character": {"0": [1, 0], "1": [1, 0], "2": [1, 0], "3": [1, 0]}, "rank": 1}]
    },
    {
      "id": "P0inf", "dim": 0, "stabilizer": [0, 1, 2, 3],
      "normal": [
        {"character": {"0": [1, 0], "1": [1, 0], "2": [2, 1], "3": [2, 1]}, "multiplicity": 1},
        {"character": {"0": [1, 0], "1": [2, 1], "2": [1, 0], "3": [2, 1]}, "multiplicity": 1}
      ],
      "sheaf": [{"character": {"0": [1, 0], "1": [1, 0], "2": [1, 0], "3": [1, 0]}, "rank": 1}]
    },
    {
      "id": "Pinf0", "dim": 0, "stabilizer": [0, 1, 2, 3],
      "normal": [
        {"character": {"0": [1, 0], "1": [1, 0], "2": [2, 1], "3": [2, 1]}, "multiplicity": 1},
        {"character": {"0": [1, 0], "1": [2, 1], "2": [1, 0], "3": [2, 1]}, "multiplicity": 1}
      ],
      "sheaf": [{"character": {"0": [1, 0], "1": [1, 0], "2": [1, 0], "3": [1, 0]}, "rank": 1}]
    },
    {
      "id": "Pinfinf", "dim": 0, "stabilizer": [0, 1, 2, 3],
      "normal": [
        {"character": {"0": [1, 0], "1": [1, 0], "2": [2, 1], "3": [2, 1]}, "multiplicity": 1},
        {"character": {"0": [1, 0], "1": [2, 1], "2": [1, 0], "3": [2, 1]}, "multiplicity": 1}
      ],
      "sheaf": [{"character": {"0": [1, 0], "1": [1, 0], "2": [1, 0], "3": [1, 0]}, "rank": 1}]
    },
    {
      "id": "Ca0", "dim": 1, "stabilizer": [0, 2],
      "normal": [{"character": {"0": [1, 0], "2": [2, 1]}, "multiplicity": 1, "degree": 0}],
      "sheaf": [{"character": {"0": [1, 0], "2": [1, 0]}, "rank": 1, "degree": 0}],
      "genus": 0, "KC": -2, "C2": 0
    },
    {
      "id": "Cainf", "dim": 1, "stabilizer": [0, 2],
      "normal": [{"character": {"0": [1, 0], "2": [2, 1]}, "multiplicity": 1, "degree": 0}],
      "sheaf": [{"character": {"0": [1, 0], "2": [1, 0]}, "rank": 1, "degree": 0}],
      "genus": 0, "KC": -2, "C2": 0
    },
    {
      "id": "Cb0", "dim": 1, "stabilizer": [0, 1],
      "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1, "degree": 0}],
      "sheaf": [{"character": {"0": [1, 0], "1": [1, 0]}, "rank": 1, "degree": 0}],
      "genus": 0, "KC": -2, "C2": 0
    },
    {
      "id": "Cbinf", "dim": 1, "stabilizer": [0, 1],
      "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1, "degree": 0}],
      "sheaf": [{"character": {"0": [1, 0], "1": [1, 0]}, "rank": 1, "degree": 0}],
      "genus": 0, "KC": -2, "C2": 0
    }
  ]
})";

constexpr const char* kFreeActionCurve = R"({
  "name": "free_action_curve",
  "group": {"kind": "cyclic", "n": 3},
  "ambient": {"dim": 1, "genus": 4},
  "sheaf": {"kind": "general", "rank": 1, "degree": 0},
  "strata": []
})";

constexpr const char* kZ4Curve = R"({
  "name": "z4_curve",
  "group": {"kind": "cyclic", "n": 4},
  "ambient": {"dim": 1, "genus": 0},
  "sheaf": {"kind": "general", "rank": 1, "degree": 0},
  "strata": [
    {
      "id": "P0", "dim": 0, "stabilizer": [0, 1, 2, 3],
      "normal": [{"character": {"0": [1, 0], "1": [4, 1], "2": [2, 1], "3": [4, 3]},
                  "multiplicity": 1}],
      "sheaf": [{"character": {"0": [1, 0], "1": [1, 0], "2": [1, 0], "3": [1, 0]}, "rank": 1}]
    },
    {
      "id": "Pinf", "dim": 0, "stabilizer": [0, 1, 2, 3],
      "normal": [{"character": {"0": [1, 0], "1": [4, 3], "2": [2, 1], "3": [4, 1]},
                  "multiplicity": 1}],
      "sheaf": [{"character": {"0": [1, 0], "1": [1, 0], "2": [1, 0], "3": [1, 0]}, "rank": 1}]
    }
  ]
})";

const std::array<std::pair<const char*, const char*>, 6> kCorpus{{
    {"p1_antipode", kP1Antipode},
    {"genus2_hyperelliptic", kGenus2Hyperelliptic},
    {"p1xp1_involution", kP1xP1Involution},
    {"klein4_surface", kKlein4Surface},
    {"free_action_curve", kFreeActionCurve},
    {"z4_curve", kZ4Curve},
}};

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, text] : kCorpus) out.emplace_back(name);
    return out;
  }();
  return names;
}

const std::string& corpus_json(const std::string& name) {
  static const std::vector<std::string> texts = [] {
    std::vector<std::string> out;
    for (const auto& [n, text] : kCorpus) out.emplace_back(text);
    return out;
  }();
  for (std::size_t i = 0; i < kCorpus.size(); ++i)
    if (name == kCorpus[i].first) return texts[i];
  std::string available;
  for (const auto& n : corpus_names()) available += (available.empty() ? "" : ", ") + n;
  fail(ErrorKind::UnknownExample, "'" + name + "'; available: " + available);
}

Scenario corpus_scenario(const std::string& name) {
  return parse_scenario(corpus_json(name));
}

}  // namespace ramiq
