#pragma once

#include <string>

#include "duckgrid/network.hpp"

namespace duckgrid {

// Loads and validates a network file (JSON schema documented in the README).
// Throws IoError on missing/unreadable files, ValidationError on schema or
// invariant violations.
Network load_network(const std::string& path);

// Parses a network from an in-memory JSON string (used by tests).
Network parse_network(const std::string& json_text, const std::string& origin);

// Replaces the load profiles of `net` with the contents of a CSV file with
// columns bus,phase,hour,p_kw,q_kvar. Every (loaded bus, phase, hour) must be
// covered exactly once.
void load_profiles_csv(Network& net, const std::string& path);

void save_profiles_csv(const Network& net, const std::string& path);

}  // namespace duckgrid
