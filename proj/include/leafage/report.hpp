#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leafage/representation.hpp"

namespace leafage {

/// Bounds on the leafage; exact implies lower == upper. A certificate, when
/// present, validates and has upper leaves.
struct LeafageReport {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::string method;
    std::optional<SubtreeRepresentation> certificate;
    std::vector<std::string> diagnostics;
};

/// Same for the proper leafage; certificates are proper. conditional marks a
/// lower bound that only holds for host trees within the searched size.
struct ProperReport {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    bool conditional = false;
    std::string method;
    std::optional<SubtreeRepresentation> certificate;
    std::vector<std::string> diagnostics;
};

}
