/**************************************************************************
 * code_io.hpp
 *
 * Copyright 2026 The bchmp authors
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
 **************************************************************************/

#pragma once

#include <iosfwd>
#include <string>

#include "bchmp/codes.hpp"

namespace bchmp {

/**
 * Line-oriented code description:
 *
 *   # optional comments
 *   field <p> <e>
 *   length <n>
 *   <n space-separated integer element codes>   (one line per generator row)
 *
 * Rows need not be independent; the loaded code is canonicalized.
 */
LinearCode read_code(std::istream& in);
LinearCode read_code_file(const std::string& path);

void write_code(std::ostream& out, const LinearCode& code);
void write_code_file(const std::string& path, const LinearCode& code);

} // namespace bchmp
