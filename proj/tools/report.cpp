#include "report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace ccstats::cli {

std::string fmt_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

json rat_json(const BigRat& value) {
    return json{{"num", numerator(value).str()},
                {"den", denominator(value).str()},
                {"approx", rat_double(value)}};
}

std::string csv_rat(const BigRat& value) { return rat_string(value); }

json field_json(const Field& field) {
    json mod = json::array();
    for (Elem c : field.modulus()) mod.push_back(c);
    return json{{"p", field.p()}, {"e", field.e()}, {"modulus", mod}};
}

json table_json(const DistributionTable& table) {
    json entries = json::array();
    if (table.is_empirical()) {
        for (const auto& [k, count] : table.counts())
            entries.push_back(json{{"k", k}, {"num", count.str()}, {"den", "1"}});
    } else {
        for (const auto& [k, mass] : table.masses())
            entries.push_back(json{
                {"k", k}, {"num", numerator(mass).str()}, {"den", denominator(mass).str()}});
    }
    return json{{"kind", table.is_empirical() ? "empirical" : "exact"},
                {"entries", entries},
                {"total", table.is_empirical() ? table.total().str() : "1"}};
}

struct OutputTarget::Impl {
    std::ofstream file;
    bool to_stdout = true;
};

OutputTarget::OutputTarget(const std::string& path) : impl_(new Impl) {
    if (!path.empty()) {
        impl_->file.open(path);
        if (!impl_->file) throw std::invalid_argument("cannot open output path: " + path);
        impl_->to_stdout = false;
    }
}

OutputTarget::~OutputTarget() = default;

std::ostream& OutputTarget::stream() {
    return impl_->to_stdout ? std::cout : impl_->file;
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        if (fields[i].find_first_of(",\"") != std::string::npos) {
            out << '"';
            for (char c : fields[i]) {
                if (c == '"') out << '"';
                out << c;
            }
            out << '"';
        } else {
            out << fields[i];
        }
    }
    out << '\n';
}

}  // namespace ccstats::cli
