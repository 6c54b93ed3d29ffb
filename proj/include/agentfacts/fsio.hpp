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

namespace agentfacts {

/// Whole-file text IO with Error{io_error} on any failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// mkdir -p. Throws Error{io_error}.
void ensure_directory(const std::string& path);

bool path_exists(const std::string& path);

}  // namespace agentfacts
