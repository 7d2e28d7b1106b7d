#pragma once

#include "gb/bounds.hpp"
#include "gb/graph.hpp"

#include <ostream>
#include <string>

namespace gb {

/// Fixed 12-significant-digit rendering; identical inputs produce identical
/// bytes across runs.
std::string fmt_real(double x);

/// Command echo plus input digest (vertex/edge counts, checksum of the
/// canonicalized input), then key-value result blocks.
class ReportWriter {
public:
    explicit ReportWriter(std::ostream& out) : out_(out) {}

    void command(const std::string& echo);
    void digest(const Graph& g);
    void section(const std::string& name);
    void kv(const std::string& key, const std::string& value);
    void kv(const std::string& key, double value);
    void kv(const std::string& key, int value);
    void verdict(bool holds);
    void bound_report(const BoundReport& report);

private:
    std::ostream& out_;
};

}  // namespace gb
