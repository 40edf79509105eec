/**************************************************************************
 * code_io.cpp
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

#include "bchmp/code_io.hpp"

#include <fstream>
#include <sstream>

namespace bchmp {

LinearCode read_code(std::istream& in) {
    const Field* f = nullptr;
    std::size_t n = 0;
    bool have_field = false, have_length = false;
    std::vector<std::vector<Elem>> rows;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (first == "field") {
            std::uint32_t p = 0, e = 0;
            if (!(ls >> p >> e)) throw param_error("malformed field line" + where);
            f = &Field::get(p, e);
            have_field = true;
        } else if (first == "length") {
            if (!(ls >> n) || n == 0) throw param_error("malformed length line" + where);
            have_length = true;
        } else {
            if (!have_field || !have_length)
                throw param_error("generator rows before field/length" + where);
            std::vector<Elem> row;
            row.reserve(n);
            std::istringstream rs(line);
            std::int64_t v = 0;
            while (rs >> v) {
                if (v < 0 || v >= static_cast<std::int64_t>(f->order()))
                    throw param_error("element code " + std::to_string(v) +
                                      " outside the field" + where);
                row.push_back(static_cast<Elem>(v));
            }
            if (row.size() != n)
                throw param_error("row has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(n) + where);
            rows.push_back(std::move(row));
        }
    }
    if (!have_field || !have_length)
        throw param_error("code description needs 'field p e' and 'length n' lines");
    return LinearCode(*f, n, std::move(rows));
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw param_error("cannot open code file '" + path + "'");
    return read_code(in);
}

void write_code(std::ostream& out, const LinearCode& code) {
    out << "field " << code.field().characteristic() << " " << code.field().degree()
        << "\n";
    out << "length " << code.length() << "\n";
    for (const auto& row : code.rows()) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? " " : "") << row[i];
        out << "\n";
    }
}

void write_code_file(const std::string& path, const LinearCode& code) {
    std::ofstream out(path);
    if (!out) throw param_error("cannot write code file '" + path + "'");
    write_code(out, code);
}

} // namespace bchmp
