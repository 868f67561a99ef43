// Shortest round-trip double formatting and a minimal CSV writer.
// CSV contract: comma separator, '.' decimal point, one header row, LF line
// endings, values serialized so that parsing them back reproduces the bits.
#pragma once

#include <charconv>
#include <ostream>
#include <string>
#include <vector>

namespace zext {

inline std::string fmt_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void header(const std::vector<std::string>& names) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i) os_ << ',';
            os_ << names[i];
        }
        os_ << '\n';
    }

    CsvWriter& field(double v) {
        if (col_++) os_ << ',';
        os_ << fmt_double(v);
        return *this;
    }

    CsvWriter& field(long long v) {
        if (col_++) os_ << ',';
        os_ << v;
        return *this;
    }

    CsvWriter& field(const std::string& v) {
        if (col_++) os_ << ',';
        os_ << v;
        return *this;
    }

    void end_row() {
        os_ << '\n';
        col_ = 0;
    }

  private:
    std::ostream& os_;
    int col_ = 0;
};

}  // namespace zext
