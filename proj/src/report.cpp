#include "gb/report.hpp"

#include <cmath>
#include <cstdio>

namespace gb {

std::string fmt_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%#.12g", x);
    return buf;
}

void ReportWriter::command(const std::string& echo) { out_ << "command: " << echo << '\n'; }

void ReportWriter::digest(const Graph& g) {
    char hex[24];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_text(g))));
    out_ << "vertices: " << g.vertex_count() << '\n';
    out_ << "edges: " << g.edge_count() << '\n';
    out_ << "digest: " << hex << '\n';
}

void ReportWriter::section(const std::string& name) { out_ << '[' << name << "]\n"; }

void ReportWriter::kv(const std::string& key, const std::string& value) {
    out_ << key << ": " << value << '\n';
}

void ReportWriter::kv(const std::string& key, double value) { kv(key, fmt_real(value)); }

void ReportWriter::kv(const std::string& key, int value) { out_ << key << ": " << value << '\n'; }

void ReportWriter::verdict(bool holds) { kv("verdict", holds ? "holds" : "violated"); }

void ReportWriter::bound_report(const BoundReport& report) {
    section(report.inequality + "-bound");
    if (report.window_values) kv("scope", "window");
    if (report.diameter) kv("diameter", *report.diameter);
    if (report.inradius) kv("inradius", *report.inradius);
    if (report.resistance_diameter) kv("resistance-diameter", *report.resistance_diameter);
    if (report.volume) kv("volume", *report.volume);
    if (report.vol_sharp) kv("vol-sharp", *report.vol_sharp);
    kv("bound", report.bound);
    kv("eigenvalue", report.eigenvalue);
    kv("ratio", report.ratio);
    verdict(report.holds);
}

}  // namespace gb
