/*
 * Copyright 2025 The AgentFacts Toolkit Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <string_view>

#include "agentfacts/canonical.hpp"
#include "agentfacts/document.hpp"

namespace agentfacts {

/// Two JSON mappings share one shape and differ only in fractional fields:
/// the display form (".af.json" files, API responses) carries decimals,
/// the canonical form carries integer micro-units so signed bytes cannot
/// drift with float formatting.
enum class JsonMode { display, canonical };

/// Full-fidelity document JSON, every present field included.
json document_json(const AgentFactsDoc& doc, JsonMode mode);

/// Builds a document from its display-form JSON. (The canonical form is
/// write-only: it exists to be hashed and signed, never re-read, because a
/// micro-unit integer is indistinguishable from a whole-number decimal.)
/// Unknown keys are rejected everywhere except inside open content
/// (custom_facts, free-form records). Throws Error{syntax_error,
/// unknown_field, type_mismatch, missing_field}.
AgentFactsDoc document_from_json(const json& v);

/// Parses UTF-8 text in the document file format.
AgentFactsDoc parse_document(std::string_view text);

/// Serializes to the document file format: two-space indent, keys in
/// code point order, trailing newline. Byte-stable for a fixed document.
std::string serialize_document(const AgentFactsDoc& doc);

/// Canonical octets of the complete document (canonical-mode JSON,
/// signatures included). Version chains hash these.
CanonicalBytes canonicalize_document(const AgentFactsDoc& doc);

/// JSON of one section's signable content in canonical mode. For the
/// verification section this excludes `signatures` and `revocation_status`,
/// so signatures attached later do not disturb verification-scoped
/// signatures; every other field of every section is covered verbatim.
/// Throws Error{unknown_section} / Error{missing_section}.
json signable_section_json(const AgentFactsDoc& doc, std::string_view name);

}  // namespace agentfacts
