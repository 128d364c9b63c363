#include "influ/csv.hpp"

#include <charconv>
#include <cstdlib>

#include "influ/types.hpp"

namespace influ::csv {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else if (c == '\r' && i + 1 == line.size()) {
            // tolerate CRLF input
        } else {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

std::string escape(const std::string& field) {
    bool needs = field.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

Reader::Reader(const std::string& path) : path_(path), in_(path) {
    if (!in_) throw DataError("cannot open file: " + path);
}

bool Reader::next_row(std::vector<std::string>& row) {
    std::string line;
    if (!std::getline(in_, line)) return false;
    ++line_;
    row = split_line(line);
    return true;
}

Writer::Writer(const std::string& path) : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw DataError("cannot open file for writing: " + path);
}

void Writer::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        out_ << escape(fields[i]);
    }
    out_ << '\n';
}

void Writer::close() {
    out_.close();
    if (!out_) throw DataError("write failed: " + path_);
}

std::int64_t parse_int(const std::string& s, const std::string& context) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DataError("bad integer '" + s + "' in " + context);
    }
    return v;
}

double parse_real(const std::string& s, const std::string& context) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || s.empty()) {
        throw DataError("bad number '" + s + "' in " + context);
    }
    return v;
}

}  // namespace influ::csv
