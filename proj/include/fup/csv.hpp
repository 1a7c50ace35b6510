#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace fup {

// Minimal RFC-4180 writer: fields holding commas, quotes or newlines are
// quoted, embedded quotes doubled. Rows use "\r\n" line ends.
class CsvWriter {
public:
    void comment_header(const std::string& line) { header_lines_.push_back(line); }

    void row(const std::vector<std::string>& fields) {
        std::ostringstream os;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) os << ',';
            os << escape(fields[i]);
        }
        rows_.push_back(os.str());
    }

    std::string str() const {
        std::ostringstream os;
        for (const auto& h : header_lines_) os << "# " << h << "\r\n";
        for (const auto& r : rows_) os << r << "\r\n";
        return os.str();
    }

private:
    static std::string escape(const std::string& f) {
        if (f.find_first_of(",\"\n\r") == std::string::npos) return f;
        std::string out = "\"";
        for (char c : f) {
            if (c == '"') out += "\"\"";
            else out += c;
        }
        out += '"';
        return out;
    }

    std::vector<std::string> header_lines_;
    std::vector<std::string> rows_;
};

} // namespace fup
