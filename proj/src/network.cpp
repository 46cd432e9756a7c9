#include "duckgrid/network.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "duckgrid/errors.hpp"

namespace duckgrid {

bool Bus::has_load() const {
  for (auto& [ph, kw] : load_kw)
    if (kw > 0.0) return true;
  return load_ref.has_value();
}

const PvSpec* Bus::pv() const {
  for (auto& d : devices)
    if (auto* p = std::get_if<PvSpec>(&d)) return p;
  return nullptr;
}

const FlexLoadSpec* Bus::flex() const {
  for (auto& d : devices)
    if (auto* p = std::get_if<FlexLoadSpec>(&d)) return p;
  return nullptr;
}

const BatterySpec* Bus::battery() const {
  for (auto& d : devices)
    if (auto* p = std::get_if<BatterySpec>(&d)) return p;
  return nullptr;
}

double ProfileSet::pv_avail_kw(const Bus& bus, int t) const {
  const PvSpec* pv = bus.pv();
  if (!pv || solar_shape.empty()) return 0.0;
  return pv->capacity_kw_per_phase * pv_scale * solar_shape[t];
}

double ProfileSet::alpha_at(int bus_id, int t) const {
  auto it = alpha.find(bus_id);
  if (it == alpha.end()) return 0.0;
  return it->second[t];
}

const Bus& Network::bus(int id) const { return buses[bus_index(id)]; }

int Network::bus_index(int id) const {
  for (size_t i = 0; i < buses.size(); ++i)
    if (buses[i].id == id) return static_cast<int>(i);
  throw ValidationError("unknown bus id " + std::to_string(id));
}

int Network::pcc_id() const {
  for (auto& b : buses)
    if (b.kind == BusKind::Pcc) return b.id;
  throw ValidationError("network has no PCC bus");
}

std::vector<int> Network::lines_from(int bus_id) const {
  std::vector<int> out;
  for (size_t l = 0; l < lines.size(); ++l)
    if (lines[l].from == bus_id) out.push_back(static_cast<int>(l));
  return out;
}

std::vector<int> Network::lines_at(int bus_id) const {
  std::vector<int> out;
  for (size_t l = 0; l < lines.size(); ++l)
    if (lines[l].from == bus_id || lines[l].to == bus_id)
      out.push_back(static_cast<int>(l));
  return out;
}

namespace {

void validate_devices(const Bus& b, int horizon) {
  const std::string at = "bus " + std::to_string(b.id);
  int pv = 0, flex = 0, batt = 0;
  for (auto& d : b.devices) {
    if (auto* p = std::get_if<PvSpec>(&d)) {
      ++pv;
      if (p->capacity_kw_per_phase < 0)
        throw ValidationError(at + ": negative PV capacity");
      if (p->pf_min < 0.8 || p->pf_min > 1.0)
        throw ValidationError(at + ": PV pf_min must be in [0.8, 1]");
    } else if (auto* f = std::get_if<FlexLoadSpec>(&d)) {
      ++flex;
      if (!f->alpha.empty()) {
        if (static_cast<int>(f->alpha.size()) != horizon)
          throw ValidationError(at + ": flex alpha profile length != horizon");
        for (double a : f->alpha)
          if (a < 0.0 || a > 1.0)
            throw ValidationError(at + ": flex alpha outside [0,1]");
      }
    } else if (auto* s = std::get_if<BatterySpec>(&d)) {
      ++batt;
      if (s->p_charge_max_kw < 0 || s->p_discharge_max_kw < 0)
        throw ValidationError(at + ": negative battery rate");
      if (s->energy_min_kwh > s->initial_kwh ||
          s->initial_kwh > s->energy_max_kwh)
        throw ValidationError(at + ": battery requires b_min <= b0 <= b_max");
      if (s->eta_charge <= 0 || s->eta_charge > 1 || s->eta_discharge <= 0 ||
          s->eta_discharge > 1)
        throw ValidationError(at + ": battery efficiencies must be in (0,1]");
      if (s->eta_self < 0 || s->eta_self >= 1)
        throw ValidationError(at + ": eta_self must be in [0,1)");
    }
  }
  if (pv > 1 || flex > 1 || batt > 1)
    throw ValidationError(at + ": at most one device of each kind per bus");
}

void validate_profiles(const Network& net) {
  const ProfileSet& ps = net.profiles;
  if (ps.empty()) return;
  if (ps.horizon != net.horizon)
    throw ValidationError("profile horizon != network horizon");
  const double tan_phi = std::tan(std::acos(net.base.pf_load));
  for (auto& [key, p] : ps.load_p_kw) {
    auto& [bus_id, ph] = key;
    const Bus& b = net.bus(bus_id);
    if (!b.phases.has(ph))
      throw ValidationError("profile for bus " + std::to_string(bus_id) +
                            " phase " + std::string(1, phase_char(ph)) +
                            " not in bus phase set");
    if (static_cast<int>(p.size()) != net.horizon)
      throw ValidationError("load profile for bus " + std::to_string(bus_id) +
                            " has " + std::to_string(p.size()) +
                            " entries, expected " + std::to_string(net.horizon));
    auto qit = ps.load_q_kvar.find(key);
    if (qit == ps.load_q_kvar.end() ||
        static_cast<int>(qit->second.size()) != net.horizon)
      throw ValidationError("missing/short Q profile for bus " +
                            std::to_string(bus_id));
    // Constant power factor per profile.
    for (int t = 0; t < net.horizon; ++t) {
      const double q_expect = p[t] * tan_phi;
      if (std::abs(qit->second[t] - q_expect) >
          1e-2 * std::max(1.0, std::abs(q_expect)))
        throw ValidationError("bus " + std::to_string(bus_id) +
                              " profile power factor is not the declared " +
                              "constant value at hour " + std::to_string(t));
    }
  }
  if (!ps.solar_shape.empty() &&
      static_cast<int>(ps.solar_shape.size()) != net.horizon)
    throw ValidationError("solar shape length != horizon");
  for (auto& [bus_id, a] : ps.alpha)
    if (static_cast<int>(a.size()) != net.horizon)
      throw ValidationError("alpha profile for bus " + std::to_string(bus_id) +
                            " length != horizon");
}

}  // namespace

void validate_network(Network& net) {
  if (net.horizon < 1) throw ValidationError("horizon must be >= 1");
  if (net.buses.empty()) throw ValidationError("network has no buses");

  std::set<int> ids;
  int pcc_count = 0;
  for (auto& b : net.buses) {
    if (!ids.insert(b.id).second)
      throw ValidationError("duplicate bus id " + std::to_string(b.id));
    if (b.phases.empty())
      throw ValidationError("bus " + std::to_string(b.id) +
                            " has an empty phase set");
    if (b.kind == BusKind::Pcc) ++pcc_count;
    for (auto& [ph, kw] : b.load_kw) {
      if (kw < 0)
        throw ValidationError("bus " + std::to_string(b.id) +
                              ": negative average load");
      if (!b.phases.has(ph))
        throw ValidationError("bus " + std::to_string(b.id) +
                              ": load on phase " +
                              std::string(1, phase_char(ph)) +
                              " outside its phase set");
    }
    validate_devices(b, net.horizon);
  }
  if (pcc_count != 1)
    throw ValidationError("network must have exactly one PCC bus, found " +
                          std::to_string(pcc_count));

  if (net.lines.size() != net.buses.size() - 1)
    throw ValidationError(
        "network is not radial: " + std::to_string(net.lines.size()) +
        " lines for " + std::to_string(net.buses.size()) + " buses");

  for (size_t l = 0; l < net.lines.size(); ++l) {
    const Line& ln = net.lines[l];
    const std::string at = "line " + std::to_string(ln.from) + "-" +
                           std::to_string(ln.to);
    if (!ids.count(ln.from) || !ids.count(ln.to))
      throw ValidationError(at + ": endpoint bus does not exist");
    if (ln.from == ln.to) throw ValidationError(at + ": self loop");
    if (ln.phases.empty()) throw ValidationError(at + ": empty phase set");
    if (!net.bus(ln.from).phases.contains(ln.phases) ||
        !net.bus(ln.to).phases.contains(ln.phases))
      throw ValidationError(at + ": phase mismatch (line phases \"" +
                            ln.phases.str() +
                            "\" not shared by both endpoint buses)");
    const int np = ln.phases.count();
    if (static_cast<int>(ln.z_ohm.size()) != np)
      throw ValidationError(at + ": impedance block dimension != |phases|");
    for (int i = 0; i < np; ++i) {
      if (static_cast<int>(ln.z_ohm[i].size()) != np)
        throw ValidationError(at + ": impedance block is not square");
      if (ln.z_ohm[i][i].real() <= 0)
        throw ValidationError(at + ": diagonal resistance must be positive");
      for (int j = 0; j < i; ++j)
        if (std::abs(ln.z_ohm[i][j] - ln.z_ohm[j][i]) > 1e-12)
          throw ValidationError(at + ": impedance block is not symmetric");
    }
  }

  // Connectivity + tree orientation from the PCC.
  const int n = static_cast<int>(net.buses.size());
  net.parent_of.assign(n, -2);
  net.parent_line.assign(n, -1);
  const int root = net.bus_index(net.pcc_id());
  net.parent_of[root] = -1;
  std::queue<int> q;
  q.push(root);
  int seen = 1;
  while (!q.empty()) {
    const int bi = q.front();
    q.pop();
    const int bid = net.buses[bi].id;
    for (int l : net.lines_at(bid)) {
      const Line& ln = net.lines[l];
      const int other = net.bus_index(ln.from == bid ? ln.to : ln.from);
      if (net.parent_of[other] != -2) continue;
      net.parent_of[other] = bi;
      net.parent_line[other] = l;
      ++seen;
      q.push(other);
    }
  }
  if (seen != n) {
    for (int i = 0; i < n; ++i)
      if (net.parent_of[i] == -2)
        throw ValidationError("network is not connected: bus " +
                              std::to_string(net.buses[i].id) +
                              " unreachable from the PCC");
  }

  std::set<int> clustered;
  for (auto& c : net.clusters) {
    if (c.empty()) throw ValidationError("empty cluster in cluster spec");
    for (int id : c) {
      if (!ids.count(id))
        throw ValidationError("cluster references unknown bus " +
                              std::to_string(id));
      if (!clustered.insert(id).second)
        throw ValidationError("bus " + std::to_string(id) +
                              " appears in more than one cluster");
    }
  }

  validate_profiles(net);
}

}  // namespace duckgrid
