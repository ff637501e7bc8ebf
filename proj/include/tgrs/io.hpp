/**************************************************************************
 * io.hpp
 *
 * Copyright 2026 the tgrs authors
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

#include <fstream>
#include <sstream>
#include <string>

#include "mceliece.hpp"

namespace tgrs {

// Plain-text formats, decimal element codes throughout. Lines starting with
// '#' are comments and are skipped by every reader; writers use them for the
// run manifest. All formats are line oriented and diff-able.

namespace io {

constexpr const char* kVersion = "tgrs v1";

/// Reads non-comment, non-empty lines.
class LineReader {
   public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            if (line.back() == '\r') line.pop_back();
            return true;
        }
        return false;
    }

    std::string expect(const std::string& what) {
        std::string line;
        require(next(line), Err::ParseError, "unexpected end of file, expected " + what);
        return line;
    }

   private:
    std::istream& in_;
};

inline std::vector<std::uint64_t> parse_numbers(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::uint64_t> out;
    std::uint64_t v;
    while (ss >> v) out.push_back(v);
    std::string rest;
    ss.clear();
    require(!(ss >> rest), Err::ParseError, "trailing tokens on numeric line");
    return out;
}

/// `field p m c_0 ... c_m`; the modulus coefficients are omitted for m = 1.
inline std::string field_header(const Field& f) {
    std::ostringstream ss;
    ss << "field " << f.p() << " " << f.m();
    for (fel c : f.modulus()) ss << " " << c;
    return ss.str();
}

inline FieldPtr parse_field_header(const std::string& line) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    require(tag == "field", Err::ParseError, "expected field header line");
    std::uint32_t p = 0, m = 0;
    require(static_cast<bool>(ss >> p >> m), Err::ParseError, "malformed field header");
    if (m == 1) return make_field(p);
    std::vector<fel> mod;
    fel c;
    while (ss >> c) mod.push_back(c);
    require(mod.size() == m + 1, Err::ParseError, "field header needs m+1 modulus coefficients");
    return make_field(p, m, std::move(mod));
}

inline void write_vector(std::ostream& out, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
    out << "\n";
}

inline Word parse_vector(const std::string& line) {
    auto nums = parse_numbers(line);
    Word w(nums.size());
    for (std::size_t i = 0; i < nums.size(); ++i) w[i] = static_cast<fel>(nums[i]);
    return w;
}

/// Matrix text block: `rows cols`, then one row per line.
inline void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.rows() << " " << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) write_vector(out, m.row(r));
}

inline Matrix read_matrix(LineReader& lr, const FieldPtr& f) {
    auto dims = parse_numbers(lr.expect("matrix dimensions"));
    require(dims.size() == 2, Err::ParseError, "matrix header must be `rows cols`");
    Matrix m(f, dims[0], dims[1]);
    for (std::size_t r = 0; r < dims[0]; ++r) {
        Word row = parse_vector(lr.expect("matrix row"));
        require(row.size() == dims[1], Err::ParseError, "matrix row width mismatch");
        for (std::size_t c = 0; c < dims[1]; ++c) m.at(r, c) = row[c];
    }
    return m;
}

inline void write_secret_key(std::ostream& out, const TgrsKey& key) {
    out << "TGRS-KEY v1\n";
    out << field_header(*key.grs.field) << "\n";
    out << key.grs.n() << " " << key.grs.k << " " << key.ell() << "\n";
    out << "alpha:";
    for (fel a : key.grs.alpha) out << " " << a;
    out << "\nv:";
    for (fel v : key.grs.mult) out << " " << v;
    out << "\nt:";
    for (std::size_t t : key.twists) out << " " << t;
    out << "\nh:";
    for (std::size_t h : key.hooks) out << " " << h;
    out << "\neta:";
    for (fel e : key.coeffs) out << " " << e;
    out << "\n";
}

inline TgrsKey read_secret_key(std::istream& in) {
    LineReader lr(in);
    require(lr.expect("magic") == "TGRS-KEY v1", Err::ParseError, "not a TGRS-KEY v1 file");
    FieldPtr f = parse_field_header(lr.expect("field header"));
    auto dims = parse_numbers(lr.expect("dimensions"));
    require(dims.size() == 3, Err::ParseError, "expected `n k l` line");
    auto tagged = [&](const std::string& tag) {
        std::string line = lr.expect(tag + " line");
        require(line.rfind(tag + ":", 0) == 0, Err::ParseError, "expected `" + tag + ":` line");
        return parse_numbers(line.substr(tag.size() + 1));
    };
    TgrsKey key;
    key.grs.field = f;
    key.grs.k = dims[1];
    for (auto v : tagged("alpha")) key.grs.alpha.push_back(static_cast<fel>(v));
    for (auto v : tagged("v")) key.grs.mult.push_back(static_cast<fel>(v));
    for (auto v : tagged("t")) key.twists.push_back(static_cast<std::size_t>(v));
    for (auto v : tagged("h")) key.hooks.push_back(static_cast<std::size_t>(v));
    for (auto v : tagged("eta")) key.coeffs.push_back(static_cast<fel>(v));
    require(key.grs.alpha.size() == dims[0], Err::ParseError, "alpha length mismatch");
    require(key.ell() == dims[2] && key.hooks.size() == dims[2] && key.coeffs.size() == dims[2],
            Err::ParseError, "twist vector length mismatch");
    key.validate();
    return key;
}

inline void write_public_key(std::ostream& out, const PublicKey& pk) {
    out << "TGRS-PUB v1\n";
    out << field_header(*pk.field()) << "\n";
    out << pk.n() << " " << pk.k() << " " << pk.w_err << "\n";
    write_matrix(out, pk.g_pub);
}

inline PublicKey read_public_key(std::istream& in) {
    LineReader lr(in);
    require(lr.expect("magic") == "TGRS-PUB v1", Err::ParseError, "not a TGRS-PUB v1 file");
    FieldPtr f = parse_field_header(lr.expect("field header"));
    auto dims = parse_numbers(lr.expect("dimensions"));
    require(dims.size() == 3, Err::ParseError, "expected `n k w_err` line");
    Matrix g = read_matrix(lr, f);
    require(g.rows() == dims[1] && g.cols() == dims[0], Err::ParseError,
            "generator shape mismatch");
    return PublicKey{std::move(g), static_cast<std::size_t>(dims[2])};
}

/// Code file: field header followed by a generator matrix block.
inline void write_code(std::ostream& out, const LinearCode& c) {
    out << field_header(*c.field()) << "\n";
    write_matrix(out, c.generator());
}

inline LinearCode read_code(std::istream& in) {
    LineReader lr(in);
    std::string first = lr.expect("field header or TGRS-PUB magic");
    if (first == "TGRS-PUB v1") {
        FieldPtr f = parse_field_header(lr.expect("field header"));
        auto dims = parse_numbers(lr.expect("dimensions"));
        require(dims.size() == 3, Err::ParseError, "expected `n k w_err` line");
        return LinearCode::from_generator(read_matrix(lr, f));
    }
    FieldPtr f = parse_field_header(first);
    return LinearCode::from_generator(read_matrix(lr, f));
}

inline Word read_vector_file(std::istream& in) {
    LineReader lr(in);
    return parse_vector(lr.expect("vector line"));
}

}  // namespace io
}  // namespace tgrs
