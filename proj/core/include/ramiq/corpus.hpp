#pragma once

#include "ramiq/scenario.hpp"

namespace ramiq {

// Built-in example scenarios, shipped as scenario JSON.
const std::vector<std::string>& corpus_names();

// Raw scenario JSON; UnknownExample for names outside the corpus.
const std::string& corpus_json(const std::string& name);

Scenario corpus_scenario(const std::string& name);

}  // namespace ramiq
