#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

namespace influ::csv {

// Splits one CSV line. Handles double-quoted fields with "" escapes; no
// embedded newlines (none of our formats produce them).
std::vector<std::string> split_line(const std::string& line);

// Quotes a field only when needed.
std::string escape(const std::string& field);

// Deterministic shortest round-trip formatting for doubles.
std::string format_double(double v);

struct Reader {
    explicit Reader(const std::string& path);
    // Returns false at EOF. Throws DataError on stream failure.
    bool next_row(std::vector<std::string>& row);
    std::size_t line_number() const { return line_; }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ifstream in_;
    std::size_t line_ = 0;
};

struct Writer {
    explicit Writer(const std::string& path);
    void row(const std::vector<std::string>& fields);
    void close();

private:
    std::string path_;
    std::ofstream out_;
};

std::int64_t parse_int(const std::string& s, const std::string& context);
double parse_real(const std::string& s, const std::string& context);

}  // namespace influ::csv
