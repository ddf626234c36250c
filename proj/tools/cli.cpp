#include "cli.hpp"

#include "coadwidth/errors.hpp"
#include "coadwidth/width.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <ostream>
#include <sstream>
#include <thread>

namespace coadwidth::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

struct TypeSelection {
  RootSystemPtr sys;
  std::string descriptor;  // normalized, e.g. "F4"
};

TypeSelection resolve_type(const std::string& type, int rank) {
  RootSystemPtr sys = rank > 0 ? build_root_system(type, rank)
                               : build_root_system(type, std::nullopt);
  return {sys, sys->label()};
}

RatVec parse_rational_list(const std::string& text) {
  RatVec out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw invalid_input_error("empty rational list");
  return out;
}

ordered_json json_rational_list(const RatVec& values) {
  ordered_json arr = ordered_json::array();
  for (const Rat& v : values) arr.push_back(format_rational(v));
  return arr;
}

ordered_json json_int_list(const IntVec& values) {
  ordered_json arr = ordered_json::array();
  for (const Int& v : values) arr.push_back(v.str());
  return arr;
}

ordered_json report_shell(const std::string& command) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  return doc;
}

ordered_json certificate_body(const GWCertificate& cert) {
  ordered_json row;
  row["c1"] = cert.c1.str();
  row["dim_gamma"] = cert.dim_gamma;
  if (cert.gw == GWValue::verified_one)
    row["gw"] = 1;
  else
    row["gw"] = "unverified";
  return row;
}

int cmd_width(const TypeSelection& sel, const std::string& basis,
              const RatVec& raw, std::ostream& out) {
  Weight lambda;
  if (basis == "fundamental") {
    if (raw.size() != static_cast<size_t>(sel.sys->rank()))
      throw invalid_input_error("lambda length must equal the rank");
    lambda = Weight{raw};
  } else if (basis == "un-diag") {
    if (!sel.sys->type_letter() || *sel.sys->type_letter() != 'A')
      throw invalid_input_error("un-diag basis is a type A input");
    if (raw.size() != static_cast<size_t>(sel.sys->rank()) + 1)
      throw invalid_input_error("un-diag input needs rank+1 entries");
    lambda = weight_from_un_diag(raw);
  } else if (basis == "euclidean") {
    if (!sel.sys->type_letter())
      throw invalid_input_error("euclidean basis needs a classified type");
    lambda = weight_from_euclidean(*sel.sys->type_letter(), sel.sys->rank(), raw);
  } else {
    throw invalid_input_error("unknown basis: " + basis);
  }

  ordered_json doc = report_shell("width");
  doc["inputs"] = {{"type", sel.descriptor},
                   {"rank", sel.sys->rank()},
                   {"basis", basis},
                   {"lambda", json_rational_list(raw)}};
  try {
    const GromovWidthReport report = gromov_width_upper(sel.sys, lambda);
    ordered_json payload;
    payload["bound"] = format_rational(report.bound);
    payload["achieving_coroot"] = json_int_list(report.achieving_coroot.coeffs);
    ordered_json parabolic = ordered_json::array();
    for (int i : report.parabolic.nodes()) parabolic.push_back(i + 1);
    payload["parabolic_nodes"] = parabolic;
    payload["dominant_lambda"] = json_rational_list(report.dominant_lambda.coords);
    payload["chamber_witness"] = report.chamber_witness.to_string();
    ordered_json areas;
    for (const auto& [node, area] : report.areas)
      areas[std::to_string(node + 1)] = format_rational(area);
    payload["areas"] = std::move(areas);
    ordered_json certs;
    for (const auto& [node, cert] : report.certificates)
      certs[std::to_string(node + 1)] = certificate_body(cert);
    payload["certificates"] = std::move(certs);
    doc["payload"] = std::move(payload);
  } catch (const degenerate_orbit_error& e) {
    doc["error"] = {{"kind", "degenerate-orbit"}, {"message", e.what()}};
    out << doc.dump(2) << "\n";
    return 2;
  }
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_certify(const TypeSelection& sel, int node_arg, bool all_nodes,
                std::ostream& out) {
  std::vector<int> nodes;
  if (all_nodes) {
    for (int i = 0; i < sel.sys->rank(); ++i) nodes.push_back(i);
  } else {
    if (node_arg < 1 || node_arg > sel.sys->rank())
      throw invalid_input_error("node out of range");
    nodes.push_back(node_arg - 1);
  }
  ordered_json doc = report_shell("certify");
  doc["inputs"] = {{"type", sel.descriptor},
                   {"rank", sel.sys->rank()},
                   {"nodes", all_nodes ? ordered_json("all")
                                       : ordered_json(node_arg)}};
  bool all_verified = true;
  ordered_json rows = ordered_json::array();
  for (int node : nodes) {
    std::vector<int> sp;
    for (int i = 0; i < sel.sys->rank(); ++i)
      if (i != node) sp.push_back(i);
    const GWCertificate cert =
        gw_certificate(ParabolicSubset(sel.sys, sp), node);
    ordered_json row;
    row["node"] = node + 1;
    row.update(certificate_body(cert));
    rows.push_back(std::move(row));
    all_verified = all_verified && cert.gw == GWValue::verified_one;
  }
  doc["payload"] = {{"rows", std::move(rows)}, {"all_verified", all_verified}};
  out << doc.dump(2) << "\n";
  return all_verified ? 0 : 3;
}

struct HasseData {
  std::vector<CosetRep> reps;   // sorted by (length, word)
  std::vector<std::pair<int, int>> edges;  // covers, lower -> higher
  int max_index = -1;
};

HasseData hasse_data(const TypeSelection& sel, int node) {
  std::vector<int> sp;
  for (int i = 0; i < sel.sys->rank(); ++i)
    if (i != node) sp.push_back(i);
  const ParabolicSubset P(sel.sys, sp);
  const CurveNeighborhood nbhd = curve_neighborhood_point(P, node);
  HasseData data;
  data.reps = nbhd.zset;
  const int n = static_cast<int>(data.reps.size());
  // Strict order matrix, then covers as its transitive reduction within
  // the set.
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        less[i][j] = data.reps[i].elem.length() < data.reps[j].elem.length() &&
                     bruhat_leq(data.reps[i].elem, data.reps[j].elem);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!less[i][j]) continue;
      bool direct = true;
      for (int k = 0; k < n && direct; ++k)
        if (less[i][k] && less[k][j]) direct = false;
      if (direct) data.edges.emplace_back(i, j);
    }
  for (int i = 0; i < n; ++i)
    if (data.reps[i].elem == nbhd.max.elem) data.max_index = i;
  return data;
}

int cmd_hasse(const TypeSelection& sel, int node_arg, const std::string& format,
              std::ostream& out) {
  if (node_arg < 1 || node_arg > sel.sys->rank())
    throw invalid_input_error("node out of range");
  const HasseData data = hasse_data(sel, node_arg - 1);
  if (format == "dot") {
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (size_t i = 0; i < data.reps.size(); ++i) {
      out << "  v" << i << " [label=\"" << data.reps[i].elem.to_string()
          << "\"";
      if (static_cast<int>(i) == data.max_index) out << ", peripheries=2";
      out << "];\n";
    }
    for (const auto& [from, to] : data.edges)
      out << "  v" << from << " -> v" << to << ";\n";
    out << "}\n";
    return 0;
  }
  if (format != "json") throw invalid_input_error("unknown format: " + format);
  ordered_json doc = report_shell("hasse");
  doc["inputs"] = {{"type", sel.descriptor},
                   {"rank", sel.sys->rank()},
                   {"node", node_arg},
                   {"format", format}};
  ordered_json vertices = ordered_json::array();
  for (size_t i = 0; i < data.reps.size(); ++i) {
    ordered_json v;
    v["id"] = i;
    v["word"] = data.reps[i].elem.to_string();
    v["length"] = data.reps[i].elem.length();
    v["is_max"] = static_cast<int>(i) == data.max_index;
    vertices.push_back(std::move(v));
  }
  ordered_json edges = ordered_json::array();
  for (const auto& [from, to] : data.edges)
    edges.push_back(ordered_json::array({from, to}));
  doc["payload"] = {{"vertices", std::move(vertices)},
                    {"edges", std::move(edges)}};
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_verify_all(int max_rank, std::ostream& out) {
  if (max_rank < 1 || max_rank > 8)
    throw invalid_input_error("--max-rank must be between 1 and 8");
  struct Job {
    RootSystemPtr sys;
    int node;
  };
  std::vector<Job> jobs;
  std::vector<std::string> group_order;
  const auto add_type = [&](char letter, int lo, int hi) {
    for (int n = lo; n <= std::min(hi, max_rank); ++n) {
      auto sys = build_root_system(letter, n);
      group_order.push_back(sys->label());
      for (int k = 0; k < n; ++k) jobs.push_back({sys, k});
    }
  };
  add_type('A', 1, 8);
  add_type('B', 2, 8);
  add_type('C', 2, 8);
  add_type('D', 4, 8);
  add_type('E', 6, 8);
  add_type('F', 4, 4);
  add_type('G', 2, 2);

  // Certificates are pure; fan the jobs out and merge by job index so the
  // output stays deterministic.
  std::vector<GWCertificate> results;
  results.reserve(jobs.size());
  for (const Job& job : jobs) {
    std::vector<int> sp;
    for (int i = 0; i < job.sys->rank(); ++i)
      if (i != job.node) sp.push_back(i);
    results.emplace_back(GWCertificate{ParabolicSubset(job.sys, sp), job.node,
                                       Int(0), 0, GWValue::unverified});
  }
  std::atomic<size_t> cursor{0};
  const unsigned workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(),
                            static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      while (true) {
        const size_t i = cursor.fetch_add(1);
        if (i >= jobs.size()) return;
        try {
          results[i] = gw_certificate(results[i].parabolic, jobs[i].node);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          failed = true;
          if (failure.empty()) failure = e.what();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failed) throw internal_inconsistency_error(failure);

  ordered_json doc = report_shell("verify-all");
  doc["inputs"] = {{"max_rank", max_rank}};
  ordered_json groups = ordered_json::array();
  bool all_verified = true;
  int total = 0, total_verified = 0;
  size_t idx = 0;
  for (const std::string& label : group_order) {
    int nodes = 0, verified = 0;
    while (idx < jobs.size() && jobs[idx].sys->label() == label) {
      ++nodes;
      ++total;
      if (results[idx].gw == GWValue::verified_one) {
        ++verified;
        ++total_verified;
      }
      ++idx;
    }
    all_verified = all_verified && nodes == verified;
    groups.push_back({{"system", label}, {"nodes", nodes}, {"verified", verified}});
  }
  doc["payload"] = {{"groups", std::move(groups)},
                    {"total_nodes", total},
                    {"total_verified", total_verified},
                    {"all_verified", all_verified}};
  out << doc.dump(2) << "\n";
  return all_verified ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Weyl-group combinatorics for coadjoint-orbit "
               "Gromov-width bounds"};
  app.require_subcommand(1);

  std::string type, lambda_text, basis = "fundamental", format = "json";
  int rank = 0, node = 0, max_rank = 8;
  bool all_nodes = false;

  CLI::App* width = app.add_subcommand(
      "width", "Width upper bound and certificates for a weight");
  width->add_option("--type", type, "Simple type, e.g. F4 or F")->required();
  width->add_option("--rank", rank, "Rank when not part of --type");
  width->add_option("--lambda", lambda_text, "Comma-separated rationals")
      ->required();
  width->add_option("--basis", basis, "fundamental | euclidean | un-diag")
      ->check(CLI::IsMember({"fundamental", "euclidean", "un-diag"}));

  CLI::App* certify = app.add_subcommand(
      "certify", "GW certificate table for maximal parabolics");
  certify->add_option("--type", type)->required();
  certify->add_option("--rank", rank);
  certify->add_option("--node", node, "1-based simple node");
  certify->add_flag("--all-nodes", all_nodes);

  CLI::App* hasse = app.add_subcommand(
      "hasse", "Bruhat diagram of the fixed points of a neighborhood");
  hasse->add_option("--type", type)->required();
  hasse->add_option("--rank", rank);
  hasse->add_option("--node", node)->required();
  hasse->add_option("--format", format, "dot | json")
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* verify = app.add_subcommand(
      "verify-all", "Sweep every maximal parabolic through --max-rank");
  verify->add_option("--max-rank", max_rank, "1..8");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (width->parsed())
      return cmd_width(resolve_type(type, rank), basis,
                       parse_rational_list(lambda_text), out);
    if (certify->parsed()) {
      if (all_nodes == (node != 0))
        throw invalid_input_error("pass exactly one of --node / --all-nodes");
      return cmd_certify(resolve_type(type, rank), node, all_nodes, out);
    }
    if (hasse->parsed())
      return cmd_hasse(resolve_type(type, rank), node, format, out);
    if (verify->parsed()) return cmd_verify_all(max_rank, out);
  } catch (const degenerate_orbit_error& e) {
    // width handles its own structured body; anything else lands here.
    err << "degenerate input: " << e.what() << "\n";
    return 2;
  } catch (const internal_inconsistency_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no command\n";
  return 1;
}

}  // namespace coadwidth::cli
