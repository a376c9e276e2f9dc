/*
 * Copyright 2025-2026 The lcspg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LCSPG_JSON_IO_HPP
#define LCSPG_JSON_IO_HPP

#include <json.hpp>

#include "lcspg/config_language.hpp"
#include "lcspg/explicit_game.hpp"
#include "lcspg/strategy.hpp"

namespace lcspg {

using Json = nlohmann::json;

/// exactly one of the two members is set
struct ParsedModel {
    std::optional<ExplicitGame> game;
    SglcsPtr lcs;
};

/// throws ParseError on io, syntax, or validation problems
ParsedModel parse_model_file(const std::string& path);
ParsedModel parse_model_json(const Json& j);

ExplicitGame game_from_json(const Json& j);
Json game_to_json(const ExplicitGame& game);
SglcsPtr lcs_from_json(const Json& j);
Json lcs_to_json(const Sglcs& lcs);

Json dfa_to_json(const Dfa& dfa, const Sglcs& lcs);
Dfa dfa_from_json(const Json& j, const Sglcs& lcs);

Json region_to_json(const ConfigLanguage& lang);
ConfigLanguage region_from_json(SglcsPtr lcs, const Json& j);
std::string region_to_dot(const ConfigLanguage& lang, const std::string& name);

Json strategy_to_json(const Sglcs& lcs, const RegularStrategy& strat);
RegularStrategy strategy_from_json(const Sglcs& lcs, const Json& j);

/// textual form control:bit:w1#w2 (channels in declaration order)
Configuration parse_config_literal(const Sglcs& lcs, const std::string& literal);

uint64_t fnv1a64(const std::string& data);

/**
 * Writes artifacts under a directory and collects a manifest with a
 * content digest per file; identical inputs produce byte-identical
 * artifacts and digests.
 */
class ArtifactWriter {
public:
    explicit ArtifactWriter(std::string dir);
    void write(const std::string& name, const std::string& content);
    void write_json(const std::string& name, const Json& j);
    /// writes manifest.json and returns it
    Json finish();

private:
    std::string dir_;
    std::vector<std::pair<std::string, std::string>> entries_; // name, digest
};

} // namespace lcspg

#endif // LCSPG_JSON_IO_HPP
