#pragma once

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "foldlift/tables.hpp"

namespace foldlift {

// A root datum resolved from a --type string, together with whatever owns it.
struct DatumHandle {
  std::unique_ptr<FoldingData> fd;
  std::unique_ptr<RootDatum> plain;
  const RootDatum* datum = nullptr;
};

// A{n} is a plain chain; B/C/F/H types are the folded side of their standard
// folding; D{4,5,6}, E6, E8 are catalog originals.
inline DatumHandle resolve_type(const std::string& type) {
  DatumHandle h;
  auto folded_of = [&](const std::string& id) {
    h.fd = build_folding(id);
    h.datum = &h.fd->folded();
  };
  auto original_of = [&](const std::string& id) {
    h.fd = build_folding(id);
    h.datum = &h.fd->original();
  };
  if (type.size() >= 2 && type[0] == 'A') {
    int n = std::stoi(type.substr(1));
    check(n >= 1 && n <= 9, errc::bad_index, "type A rank out of range");
    h.plain = std::make_unique<RootDatum>(type_a_datum(n));
    h.datum = h.plain.get();
  } else if (type.size() == 2 && type[0] == 'C') {
    int n = type[1] - '0';
    folded_of("A" + std::to_string(2 * n - 1) + "C" + std::to_string(n));
  } else if (type.size() == 2 && type[0] == 'B') {
    int n = type[1] - '0';
    folded_of("D" + std::to_string(n + 1) + "B" + std::to_string(n));
  } else if (type == "F4") {
    folded_of("E6F4");
  } else if (type == "H2") {
    folded_of("A4H2");
  } else if (type == "H3") {
    folded_of("D6H3");
  } else if (type == "H4") {
    folded_of("E8H4");
  } else if (type == "D4") {
    original_of("D4B3");
  } else if (type == "D5") {
    original_of("D5B4");
  } else if (type == "D6") {
    original_of("D6H3");
  } else if (type == "E6") {
    original_of("E6F4");
  } else if (type == "E8") {
    original_of("E8H4");
  } else {
    fail(errc::bad_index, "unknown type '" + type + "'");
  }
  return h;
}

namespace cli_detail {

inline std::vector<int> parse_parabolic_flag(const std::string& s) {
  if (s.empty()) return {};
  Word w = parse_word(s);
  std::vector<int> out(w.begin(), w.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline void print_struct_table(std::ostream& out, const MomentGraph& g,
                               const std::vector<Poly>& values) {
  for (size_t i = 0; i < g.vertices().size(); ++i)
    out << word_str(g.vertex_words()[i]) << "\t" << values[i].str(g.var_prefix()) << "\n";
}

inline nlohmann::json struct_json(const MomentGraph& g, const std::vector<Poly>& values) {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < g.vertices().size(); ++i) {
    rows.push_back({{"vertex", word_str(g.vertex_words()[i])},
                    {"value", values[i].str(g.var_prefix())}});
  }
  return rows;
}

inline nlohmann::json graph_summary_json(const MomentGraph& g) {
  nlohmann::json j = to_json(g);
  j["parabolic"] = g.parabolic();
  return j;
}

inline void cmd_catalog(std::ostream& out, const std::string& id, const std::string& format) {
  if (id.empty()) {
    if (format == "json") {
      out << nlohmann::json(catalog_ids()).dump(2) << "\n";
    } else {
      for (const auto& i : catalog_ids()) out << i << "\n";
    }
    return;
  }
  auto fd = build_folding(id);
  const FoldingSpec& s = fd->spec();
  if (format == "json") {
    nlohmann::json j;
    j["id"] = s.id;
    j["original"] = s.original_name;
    j["folded"] = s.folded_name;
    j["c1"] = s.c1;
    j["edges"] = s.edges;
    j["delta_theta"] = s.delta_theta;
    j["delta_rat"] = s.delta_rat;
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [a, b] : s.theta_pair) pairs.push_back({a, b});
    j["theta_pairs"] = pairs;
    nlohmann::json phi = nlohmann::json::object();
    for (int i = 1; i <= s.rank; ++i) phi[std::to_string(i)] = s.phi[i];
    j["phi"] = phi;
    nlohmann::json bonds = nlohmann::json::array();
    for (int i = 1; i <= s.folded_rank; ++i)
      for (int k = i + 1; k <= s.folded_rank; ++k) {
        int m = fd->folded().coxeter_m(i, k);
        if (m > 2)
          bonds.push_back({{"i", i}, {"j", k}, {"m", m},
                           {"pattern", std::string(1, classify_bond_pattern(*fd, i, k))}});
      }
    j["folded_bonds"] = bonds;
    out << j.dump(2) << "\n";
    return;
  }
  out << s.id << ": " << s.original_name << " -> " << s.folded_name << " (c1=" << s.c1 << ")\n";
  out << "edges:";
  for (auto [a, b] : s.edges) out << " " << a << "-" << b;
  out << "\n";
  out << "delta_theta:";
  for (int i : s.delta_theta) out << " " << i;
  out << "\ndelta_rat:";
  for (int i : s.delta_rat) out << " " << i;
  out << "\ntheta pairs:";
  for (auto [a, b] : s.theta_pair) out << " " << a << "<->" << b;
  out << "\nphi:";
  for (int i = 1; i <= s.rank; ++i) out << " s" << i << "->R" << s.phi[i];
  out << "\nfolded bonds:";
  for (int i = 1; i <= s.folded_rank; ++i)
    for (int k = i + 1; k <= s.folded_rank; ++k) {
      int m = fd->folded().coxeter_m(i, k);
      if (m > 2)
        out << " m(R" << i << ",R" << k << ")=" << m << "[" << classify_bond_pattern(*fd, i, k)
            << "]";
    }
  out << "\n";
}

}  // namespace cli_detail

// Embedded golden JSON; defined by each binary from the generated header.
const char* kGoldenTablesJsonView();

// The batch front end. Returns the process exit code:
//   0 success, 1 usage error, 2 computation error, 3 verification mismatch.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact root-system foldings, moment graphs, Schubert classes and liftings"};
  app.require_subcommand(1);

  std::string folding_id, type, word, format = "table", parabolic, data_path, side = "folded";
  int length_cap = -1;

  auto add_common = [&](CLI::App* cmd, bool with_type) {
    cmd->add_option("--format", format, "output format: table|json|dot");
    cmd->add_option("--parabolic", parabolic, "parabolic indices, e.g. 2346 or 2,3,4,6");
    cmd->add_option("--length-cap", length_cap, "cap for word enumeration / sweeps");
    if (with_type) {
      cmd->add_option("--type", type, "root system type, e.g. A2 C3 H4");
      cmd->add_option("--folding", folding_id, "catalog folding id, e.g. A4H2");
      cmd->add_option("--side", side, "with --folding: original|folded");
    } else {
      cmd->add_option("--folding", folding_id, "catalog folding id, e.g. A4H2")->required();
    }
  };

  CLI::App* c_catalog = app.add_subcommand("catalog", "list or describe catalog foldings");
  c_catalog->add_option("--folding", folding_id, "catalog folding id");
  c_catalog->add_option("--format", format, "table|json");

  CLI::App* c_graph = app.add_subcommand("moment-graph", "build a parabolic moment graph");
  add_common(c_graph, true);

  CLI::App* c_schubert = app.add_subcommand("schubert", "evaluate a Schubert class");
  add_common(c_schubert, true);
  c_schubert->add_option("--w", word, "group element, as a word in the generators")->required();

  CLI::App* c_fold = app.add_subcommand("fold", "map a Schubert class through the folding");
  add_common(c_fold, false);
  c_fold->add_option("--w", word, "original-side element word")->required();

  CLI::App* c_lift = app.add_subcommand("liftings", "liftings of a folded Schubert class");
  add_common(c_lift, false);
  c_lift->add_option("--u", word, "folded element word")->required();

  CLI::App* c_sweep = app.add_subcommand("sweep", "scan a quotient for nonliftable classes");
  add_common(c_sweep, false);

  CLI::App* c_verify = app.add_subcommand("verify-tables", "recompute and diff golden tables");
  c_verify->add_option("--data", data_path, "golden JSON path (default: embedded)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  limits lim;
  if (length_cap > 0) lim.word_cap = length_cap;

  try {
    std::vector<int> P = cli_detail::parse_parabolic_flag(parabolic);

    if (c_catalog->parsed()) {
      cli_detail::cmd_catalog(out, folding_id, format);
      return 0;
    }

    auto resolve = [&]() -> DatumHandle {
      if (!type.empty()) return resolve_type(type);
      check(!folding_id.empty(), errc::bad_index, "need --type or --folding");
      DatumHandle h;
      h.fd = build_folding(folding_id);
      h.datum = side == "original" ? &h.fd->original() : &h.fd->folded();
      return h;
    };

    if (c_graph->parsed()) {
      DatumHandle h = resolve();
      MomentGraph g = build_moment_graph(*h.datum, P, lim);
      if (format == "dot")
        out << to_dot(g);
      else if (format == "json")
        out << cli_detail::graph_summary_json(g).dump(2) << "\n";
      else {
        out << h.datum->name << " W^P: " << g.vertices().size() << " vertices, "
            << g.edges().size() << " edges\n";
        for (const auto& e : g.edges())
          out << word_str(g.vertex_words()[e.from]) << " -> " << word_str(g.vertex_words()[e.to])
              << " [" << root_label_str(g.edge_label(e), g.var_prefix()) << "]\n";
      }
      return 0;
    }

    if (c_schubert->parsed()) {
      DatumHandle h = resolve();
      GroupElement w = element_of(*h.datum, parse_word(word));
      MomentGraph g = build_moment_graph(*h.datum, P, lim);
      StructClass cls = schubert_class(w, g);
      if (format == "json") {
        nlohmann::json j;
        j["type"] = h.datum->name;
        j["w"] = word_str(lex_least_word(w));
        j["parabolic"] = P;
        j["values"] = cli_detail::struct_json(g, cls.values);
        out << j.dump(2) << "\n";
      } else {
        cli_detail::print_struct_table(out, g, cls.values);
      }
      return 0;
    }

    if (c_fold->parsed()) {
      auto fd = build_folding(folding_id);
      GroupElement w = element_of(fd->original(), parse_word(word));
      check(in_quotient(w, P), errc::not_in_quotient,
            "--w must be a minimal coset representative for the parabolic");
      MomentGraph fg = build_moment_graph(fd->folded(), fd->folded_parabolic(P), lim);
      std::vector<Poly> values;
      for (const auto& uw : fg.vertex_words())
        values.push_back(folded_schubert_eval(*fd, w, fd->embed(uw)));
      if (format == "json") {
        nlohmann::json j;
        j["folding"] = folding_id;
        j["w"] = word_str(lex_least_word(w));
        j["parabolic"] = P;
        j["values"] = cli_detail::struct_json(fg, values);
        out << j.dump(2) << "\n";
      } else {
        cli_detail::print_struct_table(out, fg, values);
      }
      return 0;
    }

    if (c_lift->parsed()) {
      auto fd = build_folding(folding_id);
      Word uw = parse_word(word);
      check(is_reduced(fd->folded(), uw), errc::not_reduced, "--u must be a reduced word");
      GroupElement u = element_of(fd->folded(), uw);
      LiftReport r = liftings_of(*fd, u, P, lim, true);
      if (r.liftings.empty() && nonliftable_by_catalog(*fd, lex_least_word(u), lim))
        r.method = LiftMethod::catalog_nonliftable;
      if (format == "json") {
        nlohmann::json j;
        j["folding"] = folding_id;
        j["parabolic"] = P;
        j["u_word"] = word_str(r.u_word);
        j["liftable"] = !r.liftings.empty();
        j["method"] = lift_method_name(r.method);
        j["liftings"] = nlohmann::json::array();
        for (const auto& l : r.liftings)
          j["liftings"].push_back({{"word", word_str(l.word)}, {"exponent_m", l.exponent_m}});
        out << j.dump(2) << "\n";
      } else {
        out << u.length() << " | " << word_str(r.u_word) << " | ";
        if (r.liftings.empty()) {
          out << "(nonliftable)";
        } else {
          for (size_t i = 0; i < r.liftings.size(); ++i)
            out << (i ? ", " : "") << word_str(r.liftings[i].word);
        }
        out << "\n";
      }
      return 0;
    }

    if (c_sweep->parsed()) {
      auto fd = build_folding(folding_id);
      int cap = length_cap > 0 ? length_cap : limits{}.word_cap;
      limits sweep_lim;
      sweep_lim.word_cap = cap;
      SweepVerdict v = lifting_property_sweep(*fd, P, cap, sweep_lim);
      if (format == "json") {
        nlohmann::json j;
        j["folding"] = folding_id;
        j["parabolic"] = P;
        j["length_cap"] = cap;
        j["max_length_checked"] = v.max_length_checked;
        switch (v.status) {
          case SweepStatus::holds: j["verdict"] = "holds"; break;
          case SweepStatus::holds_up_to_cap: j["verdict"] = "holds-up-to-cap"; break;
          case SweepStatus::witness_found:
            j["verdict"] = "witness";
            j["witness"] = word_str(v.witness);
            j["method"] = lift_method_name(v.witness_method);
            break;
        }
        out << j.dump(2) << "\n";
      } else {
        switch (v.status) {
          case SweepStatus::holds: out << "holds\n"; break;
          case SweepStatus::holds_up_to_cap:
            out << "holds-up-to-cap " << v.max_length_checked << "\n";
            break;
          case SweepStatus::witness_found:
            out << "witness " << word_str(v.witness) << " ("
                << lift_method_name(v.witness_method) << ")\n";
            break;
        }
      }
      return 0;
    }

    if (c_verify->parsed()) {
      nlohmann::json root;
      if (!data_path.empty()) {
        std::ifstream in(data_path);
        check(in.good(), errc::bad_index, "cannot open golden data at " + data_path);
        in >> root;
      } else {
        root = nlohmann::json::parse(kGoldenTablesJsonView());
      }
      std::vector<std::string> diffs = golden::verify_all(root);
      if (diffs.empty()) {
        out << "verify-tables: OK\n";
        return 0;
      }
      for (const auto& d : diffs) out << "DIFF " << d << "\n";
      out << "verify-tables: " << diffs.size() << " mismatch(es)\n";
      return 3;
    }
  } catch (const error& e) {
    err << "error[" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace foldlift
