#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdicw {

enum class StateLabel { Z0, Z1, XP, YP, Rho, RhoPlusI, RhoMinusI };
enum class IntensityClass { Signal, Decoy, Vacuum };

std::string to_string(StateLabel s);
std::string to_string(IntensityClass c);
std::optional<StateLabel> parse_state_label(std::string_view s);
std::optional<IntensityClass> parse_intensity_class(std::string_view s);

// One ingested experiment record: pulses sent and detections recorded "1"
// (losses and double clicks are already folded into "0" upstream).
struct CountsRecord {
    StateLabel state;
    IntensityClass intensity;
    std::uint64_t sent;
    std::uint64_t ones;
};

using CountsTable = std::vector<CountsRecord>;

// CSV schema: header "state,intensity,sent,ones", UTF-8, no quoting.
// Throws ParseError with the offending 1-based line number.
CountsTable read_counts_csv(std::istream& in);
void write_counts_csv(std::ostream& out, const CountsTable& table);

const CountsRecord* find_record(const CountsTable& table, StateLabel s, IntensityClass c);

// ones/sent. Throws EmptyRecord when sent = 0.
double empirical_prob(const CountsRecord& r);

}  // namespace mdicw
