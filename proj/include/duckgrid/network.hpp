#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "duckgrid/phase.hpp"

namespace duckgrid {

using Complex = std::complex<double>;

enum class BusKind { Residential, Commercial, Pcc };

struct PvSpec {
  double capacity_kw_per_phase = 0.0;  // nameplate, before penetration scaling
  double pf_min = 0.8;                 // inverter power factor range [pf_min, 1]
};

struct FlexLoadSpec {
  // Per-hour maximum demand-reduction fraction. May be filled by the profile
  // generator instead of the network file.
  std::vector<double> alpha;
};

struct BatterySpec {
  double p_charge_max_kw = 0.0;
  double p_discharge_max_kw = 0.0;
  double energy_max_kwh = 0.0;
  double energy_min_kwh = 0.0;
  double initial_kwh = 0.0;
  double eta_charge = 1.0;     // (0,1]
  double eta_discharge = 1.0;  // (0,1]
  double eta_self = 0.0;       // [0,1) per-hour self-discharge
};

using DeviceSpec = std::variant<PvSpec, FlexLoadSpec, BatterySpec>;

struct Bus {
  int id = 0;
  PhaseSet phases;
  BusKind kind = BusKind::Residential;
  // Daily-average load per phase (kW, consumption positive); scaffold data for
  // the profile generator. Zero for junction buses and the PCC.
  std::map<Phase, double> load_kw;
  std::optional<std::string> load_ref;  // explicit profile id, if any
  std::vector<DeviceSpec> devices;

  bool has_load() const;
  const PvSpec* pv() const;
  const FlexLoadSpec* flex() const;
  const BatterySpec* battery() const;
};

struct Line {
  int from = 0;
  int to = 0;
  PhaseSet phases;
  // Square impedance block over phases() order, ohms; symmetric, self terms on
  // the diagonal, mutual coupling off-diagonal.
  std::vector<std::vector<Complex>> z_ohm;
};

struct BaseUnits {
  double s_base_kva = 100.0;    // per-phase power base
  double v_base_kv_ln = 14.376; // line-to-neutral voltage base
  double pf_load = 0.95;        // constant load power factor

  double z_base_ohm() const {
    return (v_base_kv_ln * 1e3) * (v_base_kv_ln * 1e3) / (s_base_kva * 1e3);
  }
};

// Voltage/current pre-processing parameters; defaults give a ±10% magnitude
// band and a ±30deg angle window around each phase's nominal angle. Feeder
// files may declare tighter windows when engineering data supports them.
struct BoundsOptions {
  double v_band = 0.10;
  double angle_window_deg = 30.0;
};

struct Network;

// Per-hour load/flexibility/solar profiles attached to a network.
struct ProfileSet {
  int horizon = 0;
  // (bus id, phase) -> hourly consumption, kW / kvar (consumption positive).
  std::map<std::pair<int, Phase>, std::vector<double>> load_p_kw;
  std::map<std::pair<int, Phase>, std::vector<double>> load_q_kvar;
  std::map<int, std::vector<double>> alpha;  // bus id -> hourly DR fraction
  std::vector<double> solar_shape;           // global irradiance shape, [0,1]
  double pv_scale = 1.0;                     // penetration-matching multiplier

  bool empty() const { return load_p_kw.empty(); }
  double pv_avail_kw(const Bus& bus, int t) const;  // per phase of the bus
  double alpha_at(int bus_id, int t) const;
};

struct Network {
  std::string name;
  int horizon = 24;
  BaseUnits base;
  BoundsOptions bounds_options;
  std::vector<Bus> buses;
  std::vector<Line> lines;
  std::vector<std::vector<int>> clusters;  // bus-id lists, Scenario B/C agents
  ProfileSet profiles;                     // may be empty until generated

  const Bus& bus(int id) const;
  int bus_index(int id) const;
  int pcc_id() const;

  // Tree structure rooted at the PCC: parent bus id per bus (-1 at root) and
  // the line index connecting a bus to its parent.
  std::vector<int> parent_of;    // by bus index
  std::vector<int> parent_line;  // by bus index, -1 at root

  std::vector<int> lines_from(int bus_id) const;  // line indices, file order
  std::vector<int> lines_at(int bus_id) const;    // incident lines
};

// Validates all structural invariants (radiality, unique ids, phase
// consistency, device parameter ranges, profile shape) and fills tree fields.
// Throws ValidationError naming the offending element.
void validate_network(Network& net);

}  // namespace duckgrid
