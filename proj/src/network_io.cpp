#include "duckgrid/network_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "duckgrid/errors.hpp"

namespace duckgrid {

using nlohmann::json;

namespace {

Phase parse_phase_char(const std::string& s) {
  if (s.size() != 1) throw ValidationError("bad phase \"" + s + "\"");
  switch (s[0]) {
    case 'a': return Phase::A;
    case 'b': return Phase::B;
    case 'c': return Phase::C;
  }
  throw ValidationError("bad phase \"" + s + "\"");
}

Complex parse_complex(const json& j, const std::string& at) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw ValidationError(at + ": complex values must be {re, im} objects");
  return Complex(j["re"].get<double>(), j["im"].get<double>());
}

DeviceSpec parse_device(const json& j, const std::string& at) {
  const std::string type = j.value("type", "");
  if (type == "pv") {
    PvSpec pv;
    pv.capacity_kw_per_phase = j.value("capacity_kw_per_phase", 0.0);
    pv.pf_min = j.value("pf_min", 0.8);
    return pv;
  }
  if (type == "flex_load") {
    FlexLoadSpec f;
    if (j.contains("alpha")) f.alpha = j["alpha"].get<std::vector<double>>();
    return f;
  }
  if (type == "battery") {
    BatterySpec b;
    b.p_charge_max_kw = j.value("p_charge_max_kw", 0.0);
    b.p_discharge_max_kw = j.value("p_discharge_max_kw", 0.0);
    b.energy_max_kwh = j.value("energy_max_kwh", 0.0);
    b.energy_min_kwh = j.value("energy_min_kwh", 0.0);
    b.initial_kwh = j.value("initial_kwh", 0.0);
    b.eta_charge = j.value("eta_charge", 1.0);
    b.eta_discharge = j.value("eta_discharge", 1.0);
    b.eta_self = j.value("eta_self", 0.0);
    return b;
  }
  throw ValidationError(at + ": unknown device type \"" + type + "\"");
}

Network parse_json(const json& doc, const std::string& origin) {
  Network net;
  net.name = doc.value("name", origin);
  net.horizon = doc.value("horizon", 24);
  if (doc.contains("base")) {
    const json& b = doc["base"];
    net.base.s_base_kva = b.value("s_base_kva", net.base.s_base_kva);
    net.base.v_base_kv_ln = b.value("v_base_kv_ln", net.base.v_base_kv_ln);
    net.base.pf_load = b.value("pf_load", net.base.pf_load);
  }
  if (doc.contains("bounds")) {
    const json& b = doc["bounds"];
    net.bounds_options.v_band = b.value("v_band", net.bounds_options.v_band);
    net.bounds_options.angle_window_deg =
        b.value("angle_window_deg", net.bounds_options.angle_window_deg);
  }

  if (!doc.contains("buses") || !doc["buses"].is_array())
    throw ValidationError(origin + ": missing buses[]");
  for (const json& jb : doc["buses"]) {
    Bus b;
    b.id = jb.at("id").get<int>();
    const std::string at = origin + ": bus " + std::to_string(b.id);
    b.phases = PhaseSet::parse(jb.value("phases", "abc"));
    const std::string kind = jb.value("kind", "residential");
    if (kind == "pcc") b.kind = BusKind::Pcc;
    else if (kind == "commercial") b.kind = BusKind::Commercial;
    else if (kind == "residential") b.kind = BusKind::Residential;
    else throw ValidationError(at + ": unknown bus kind \"" + kind + "\"");
    if (jb.contains("load_kw")) {
      for (auto& [k, v] : jb["load_kw"].items())
        b.load_kw[parse_phase_char(k)] = v.get<double>();
    }
    if (jb.contains("load_profile"))
      b.load_ref = jb["load_profile"].get<std::string>();
    if (jb.contains("devices"))
      for (const json& jd : jb["devices"]) b.devices.push_back(parse_device(jd, at));
    net.buses.push_back(std::move(b));
  }

  if (doc.contains("lines")) {
    for (const json& jl : doc["lines"]) {
      Line ln;
      ln.from = jl.at("from").get<int>();
      ln.to = jl.at("to").get<int>();
      const std::string at = origin + ": line " + std::to_string(ln.from) +
                             "-" + std::to_string(ln.to);
      ln.phases = PhaseSet::parse(jl.value("phases", "abc"));
      const int np = ln.phases.count();
      ln.z_ohm.assign(np, std::vector<Complex>(np, Complex(0, 0)));
      if (!jl.contains("impedance_ohm"))
        throw ValidationError(at + ": missing impedance_ohm");
      const json& jz = jl["impedance_ohm"];
      auto phs = ln.phases.phases();
      for (int i = 0; i < np; ++i) {
        for (int j = 0; j < np; ++j) {
          std::string key{phase_char(phs[i]), phase_char(phs[j])};
          if (jz.contains(key))
            ln.z_ohm[i][j] = parse_complex(jz[key], at);
          else {
            std::string rkey{phase_char(phs[j]), phase_char(phs[i])};
            if (jz.contains(rkey)) ln.z_ohm[i][j] = parse_complex(jz[rkey], at);
            else if (i == j)
              throw ValidationError(at + ": missing self impedance " + key);
          }
        }
      }
      net.lines.push_back(std::move(ln));
    }
  }

  if (doc.contains("clusters"))
    for (const json& jc : doc["clusters"])
      net.clusters.push_back(jc.get<std::vector<int>>());

  if (doc.contains("profiles")) {
    const json& jp = doc["profiles"];
    net.profiles.horizon = net.horizon;
    if (jp.contains("solar_shape"))
      net.profiles.solar_shape = jp["solar_shape"].get<std::vector<double>>();
    if (jp.contains("load")) {
      // Profiles keyed by id; buses reference them via load_profile.
      std::map<std::string, json> by_id;
      for (auto& [id, body] : jp["load"].items()) by_id[id] = body;
      const double tan_phi = std::tan(std::acos(net.base.pf_load));
      for (const Bus& b : net.buses) {
        if (!b.load_ref) continue;
        auto it = by_id.find(*b.load_ref);
        if (it == by_id.end())
          throw ValidationError(origin + ": bus " + std::to_string(b.id) +
                                " references unknown profile \"" +
                                *b.load_ref + "\"");
        for (auto& [phs, arr] : it->second.items()) {
          const Phase ph = parse_phase_char(phs);
          auto p = arr.get<std::vector<double>>();
          std::vector<double> q(p.size());
          for (size_t t = 0; t < p.size(); ++t) q[t] = p[t] * tan_phi;
          net.profiles.load_p_kw[{b.id, ph}] = std::move(p);
          net.profiles.load_q_kvar[{b.id, ph}] = std::move(q);
        }
      }
    }
  }

  validate_network(net);
  return net;
}

}  // namespace

Network parse_network(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(origin + ": parse error: " + e.what());
  }
  return parse_json(doc, origin);
}

Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open network file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_network(ss.str(), path);
}

void load_profiles_csv(Network& net, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open profile file " + path);
  ProfileSet ps;
  ps.horizon = net.horizon;
  ps.solar_shape = net.profiles.solar_shape;
  ps.alpha = net.profiles.alpha;
  ps.pv_scale = net.profiles.pv_scale;

  std::string line;
  if (!std::getline(in, line))
    throw ValidationError(path + ": empty profile file");
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string f0, f1, f2, f3, f4;
    if (!std::getline(row, f0, ',') || !std::getline(row, f1, ',') ||
        !std::getline(row, f2, ',') || !std::getline(row, f3, ',') ||
        !std::getline(row, f4, ','))
      throw ValidationError(path + ":" + std::to_string(lineno) +
                            ": expected bus,phase,hour,p_kw,q_kvar");
    const int bus = std::stoi(f0);
    const Phase ph = parse_phase_char(f1);
    const int hour = std::stoi(f2);
    if (hour < 0 || hour >= net.horizon)
      throw ValidationError(path + ":" + std::to_string(lineno) +
                            ": hour out of range");
    auto& p = ps.load_p_kw[{bus, ph}];
    auto& q = ps.load_q_kvar[{bus, ph}];
    if (p.empty()) {
      p.assign(net.horizon, std::nan(""));
      q.assign(net.horizon, 0.0);
    }
    if (!std::isnan(p[hour]))
      throw ValidationError(path + ":" + std::to_string(lineno) +
                            ": duplicate entry");
    p[hour] = std::stod(f3);
    q[hour] = std::stod(f4);
  }
  for (auto& [key, p] : ps.load_p_kw)
    for (int t = 0; t < net.horizon; ++t)
      if (std::isnan(p[t]))
        throw ValidationError(path + ": bus " + std::to_string(key.first) +
                              " phase " + std::string(1, phase_char(key.second)) +
                              " missing hour " + std::to_string(t));
  net.profiles = std::move(ps);
  validate_network(net);
}

void save_profiles_csv(const Network& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write profile file " + path);
  out << "bus,phase,hour,p_kw,q_kvar\n";
  char buf[160];
  for (auto& [key, p] : net.profiles.load_p_kw) {
    const auto& q = net.profiles.load_q_kvar.at(key);
    for (int t = 0; t < net.horizon; ++t) {
      std::snprintf(buf, sizeof(buf), "%d,%c,%d,%.6f,%.6f\n", key.first,
                    phase_char(key.second), t, p[t], q[t]);
      out << buf;
    }
  }
}

}  // namespace duckgrid
