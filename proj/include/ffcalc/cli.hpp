#pragma once

#include "ffcalc/combinations.hpp"
#include "ffcalc/derivative.hpp"
#include "ffcalc/harmonic.hpp"
#include "ffcalc/identities.hpp"
#include "ffcalc/missing_factor.hpp"
#include "ffcalc/numeric.hpp"
#include "ffcalc/stirling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffcalc::cli {

enum class Format { csv, json };

struct OutputRecord {
  std::vector<std::string> labels;
  std::string exact;
  std::optional<std::string> decimal;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;  // one per label
  std::vector<OutputRecord> records;
  std::vector<std::string> notes;
  bool with_decimal = false;

  void add(std::vector<std::string> labels, const Rational& value) {
    OutputRecord r{std::move(labels), to_string(value), std::nullopt};
    if (with_decimal) {
      r.decimal = to_decimal(value);
    }
    records.push_back(std::move(r));
  }
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + '"';
}

inline void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out << (i ? "," : "") << csv_field(fields[i]);
  }
  out << '\n';
}

}  // namespace detail

inline void write_table(std::ostream& out, const Table& t, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json doc;
    doc["table"] = t.name;
    doc["columns"] = t.columns;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& r : t.records) {
      nlohmann::ordered_json rec;
      rec["labels"] = r.labels;
      rec["exact"] = r.exact;
      if (r.decimal) {
        rec["decimal"] = *r.decimal;
      }
      doc["records"].push_back(std::move(rec));
    }
    doc["notes"] = t.notes;
    out << doc.dump(2) << '\n';
    return;
  }
  auto header = t.columns;
  header.emplace_back("exact");
  if (t.with_decimal) {
    header.emplace_back("decimal");
  }
  detail::write_csv_row(out, header);
  for (const auto& r : t.records) {
    auto row = r.labels;
    row.push_back(r.exact);
    if (r.decimal) {
      row.push_back(*r.decimal);
    }
    detail::write_csv_row(out, row);
  }
  for (const auto& note : t.notes) {
    out << "# note: " << note << '\n';
  }
}

/// Rows -5..5, columns 0..5 of the signed first-kind numbers with 3-significant-figure decimals.
inline Table extended_stirling_table() {
  Table t{"stirling1", {"n", "k"}, {}, {}, true};
  for (int n = -5; n <= 5; ++n) {
    for (int k = 0; k <= 5; ++k) {
      t.add({std::to_string(n), std::to_string(k)}, stirling1(n, k));
    }
  }
  t.notes = {
      "s(5,3) = 35 from the expansion x^(5) = x^5 - 10x^4 + 35x^3 - 50x^2 + 24x; the reference grid prints 36",
      "column k = 0 of negative rows is s(n,0) = 1/(-n)!; the reference grid lists 1/(1-n)!, one row out of step",
      "s(-4,5) = -952525/5971968 = -0.15949...; the reference grid prints -0.160, which is not its 3-figure rounding",
  };
  return t;
}

namespace detail {

inline Format parse_format(const std::string& s) { return s == "json" ? Format::json : Format::csv; }

inline std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

inline std::vector<int> parse_members(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_ids(s)) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("malformed member list: '" + s + "'");
    }
    out.push_back(v);
  }
  return out;
}

inline nlohmann::ordered_json report_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["statement"] = r.statement;
  if (!r.note.empty()) {
    j["note"] = r.note;
  }
  j["checked"] = r.checked;
  j["passed"] = r.passed;
  if (r.first_failure) {
    nlohmann::ordered_json w;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.first_failure->params.values()) {
      params[k] = v;
    }
    w["params"] = params;
    if (r.first_failure->lhs) {
      w["lhs"] = to_string(*r.first_failure->lhs);
    }
    if (r.first_failure->rhs) {
      w["rhs"] = to_string(*r.first_failure->rhs);
    }
    if (!r.first_failure->error.empty()) {
      w["error"] = r.first_failure->error;
    }
    j["first_failure"] = w;
  }
  return j;
}

}  // namespace detail

/// Runs the command line given without the program name. Returns 0 on success, 1 when a
/// verification or route comparison fails, 2 on usage or domain errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact falling-factorial derivatives, Stirling tables and identity checks", "ffcalc"};
  app.require_subcommand(1);
  std::string format_text = "csv";
  const auto format_check = CLI::IsMember({"csv", "json"});

  // table
  auto* table = app.add_subcommand("table", "Print a table of values");
  std::string table_kind;
  int nmin = 0;
  int nmax = 10;
  std::optional<int> kmax;
  int table_r = 1;
  int table_v = 1;
  bool extended_table = false;
  bool decimal = false;
  table->add_option("kind", table_kind, "stirling1 | stirling2 | rstirling | acoeff | esh")
      ->required()
      ->check(CLI::IsMember({"stirling1", "stirling2", "rstirling", "acoeff", "esh"}));
  table->add_option("--nmin", nmin, "First row (may be negative for stirling1/stirling2)");
  table->add_option("--nmax", nmax, "Last row");
  table->add_option("--kmax", kmax, "Last column (default: nmax)");
  table->add_option("--r", table_r, "r parameter for rstirling and esh");
  table->add_option("--v", table_v, "Power v for esh");
  table->add_flag("--paper-table", extended_table, "Rows -5..5, columns 0..5 of stirling1 with decimals");
  table->add_flag("--decimal", decimal, "Add a 3-significant-figure decimal column");
  table->add_option("--format", format_text, "csv | json")->check(format_check);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a single quantity");
  std::string eval_kind;
  int en = 0;
  int el = 0;
  int em = 0;
  int er = 0;
  int ev = 1;
  std::string route_text = "stirling";
  bool every_route = false;
  std::string at_text;
  std::string missing_text;
  eval->add_option("kind", eval_kind, "deriv | deriv-poly | theta | esh")
      ->required()
      ->check(CLI::IsMember({"deriv", "deriv-poly", "theta", "esh"}));
  eval->add_option("--n", en, "Order n")->required();
  eval->add_option("--l", el, "Derivative order l, or l for esh");
  eval->add_option("--m", em, "Integer evaluation point m");
  eval->add_option("--r", er, "r for esh");
  eval->add_option("--v", ev, "Power v for esh");
  eval->add_option("--route", route_text, "oracle | symbolic | harmonic | stirling")
      ->check(CLI::IsMember({"oracle", "symbolic", "harmonic", "stirling"}));
  eval->add_flag("--all-routes", every_route, "Evaluate every route and compare");
  eval->add_option("--at", at_text, "Rational evaluation point p/q for deriv-poly and theta");
  eval->add_option("--missing", missing_text, "Comma-separated missing factors for theta, e.g. 0,2");
  eval->add_option("--format", format_text, "csv | json")->check(format_check);

  // enum
  auto* enumerate = app.add_subcommand("enum", "List the l-subsets of {0..n-1} in lexicographic order");
  int enum_n = 0;
  int enum_l = 0;
  std::string enum_format = "text";
  enumerate->add_option("--n", enum_n, "Universe size")->required();
  enumerate->add_option("--l", enum_l, "Subset size")->required();
  enumerate->add_option("--format", enum_format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run the identity catalog");
  int max_n = 8;
  std::string only_text;
  std::string verify_format = "text";
  verify->add_option("--max-n", max_n, "Grid scale");
  verify->add_option("--only", only_text, "Comma-separated ids, e.g. EQ72,EQ89");
  verify->add_option("--format", verify_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const Format format = detail::parse_format(format_text);
  try {
    if (table->parsed()) {
      Table t;
      if (extended_table) {
        if (table_kind != "stirling1") {
          throw std::invalid_argument("--paper-table applies to stirling1 only");
        }
        t = extended_stirling_table();
      } else {
        if (nmax < nmin) {
          throw std::invalid_argument("--nmax must be >= --nmin");
        }
        const int k_last = kmax.value_or(std::max(nmax, 0));
        t.with_decimal = decimal;
        t.name = table_kind;
        if (table_kind == "stirling1" || table_kind == "stirling2") {
          t.columns = {"n", "k"};
          for (int n = nmin; n <= nmax; ++n) {
            for (int k = 0; k <= k_last; ++k) {
              t.add({std::to_string(n), std::to_string(k)}, table_kind == "stirling1" ? stirling1(n, k) : stirling2(n, k));
            }
          }
        } else if (table_kind == "rstirling") {
          require_natural(nmin, "--nmin");
          t.columns = {"n", "k", "r"};
          for (int n = nmin; n <= nmax; ++n) {
            for (int k = 0; k <= k_last; ++k) {
              t.add({std::to_string(n), std::to_string(k), std::to_string(table_r)}, Rational(r_stirling1(n, k, table_r)));
            }
          }
        } else if (table_kind == "acoeff") {
          require_natural(nmin, "--nmin");
          t.columns = {"r", "k"};
          for (int r = nmin; r <= nmax; ++r) {
            for (int k = 0; k <= k_last; ++k) {
              t.add({std::to_string(r), std::to_string(k)}, a_coefficient(r, k));
            }
          }
        } else {
          require_natural(nmin, "--nmin");
          t.columns = {"n", "l", "r", "v"};
          const auto grid = esh_matrix(nmax, table_r, table_v);
          for (int n = nmin; n <= nmax; ++n) {
            for (int l = 0; l <= std::min(n, k_last); ++l) {
              t.add({std::to_string(n), std::to_string(l), std::to_string(table_r), std::to_string(table_v)}, grid.at(n, l));
            }
          }
        }
      }
      write_table(out, t, format);
      return 0;
    }

    if (eval->parsed()) {
      Table t;
      t.name = eval_kind;
      if (eval_kind == "deriv") {
        t.columns = {"n", "l", "m", "route"};
        const auto labels = [&](Route r) {
          return std::vector<std::string>{std::to_string(en), std::to_string(el), std::to_string(em), std::string(to_string(r))};
        };
        if (every_route) {
          std::optional<Rational> first;
          bool match = true;
          for (Route r : ffcalc::all_routes) {
            const Rational value = deriv_at({en, el, em, r});
            match = match && (!first || *first == value);
            if (!first) {
              first = value;
            }
            t.add(labels(r), value);
          }
          t.notes.push_back(match ? "verdict MATCH" : "verdict MISMATCH");
          write_table(out, t, format);
          return match ? 0 : 1;
        }
        const Route r = *parse_route(route_text);
        t.add(labels(r), deriv_at({en, el, em, r}));
      } else if (eval_kind == "deriv-poly") {
        const Route r = *parse_route(route_text);
        if (r == Route::harmonic || r == Route::stirling) {
          if (eval->count("--route") > 0) {
            throw std::invalid_argument("deriv-poly supports the oracle and symbolic routes");
          }
        }
        const Poly p = r == Route::symbolic ? deriv_poly_symbolic(en, el) : deriv_poly_oracle(en, el);
        if (!at_text.empty()) {
          t.columns = {"n", "l", "x"};
          const Rational x = parse_rational(at_text);
          t.add({std::to_string(en), std::to_string(el), to_string(x)}, evaluate(p, x));
        } else {
          t.columns = {"n", "l", "j"};
          for (std::size_t j = 0; j < std::max<std::size_t>(p.coefficients().size(), 1); ++j) {
            t.add({std::to_string(en), std::to_string(el), std::to_string(j)}, p.coefficient(j));
          }
        }
      } else if (eval_kind == "theta") {
        const MissingFactorSet missing(en, detail::parse_members(missing_text));
        const std::string tuple = to_string(missing);
        if (!at_text.empty()) {
          t.columns = {"n", "missing", "x"};
          const Rational x = parse_rational(at_text);
          t.add({std::to_string(en), tuple, to_string(x)}, theta_eval(en, missing, x));
        } else {
          t.columns = {"n", "missing", "j"};
          const auto coeffs = theta_coefficients(en, missing).coefficients;
          for (std::size_t j = 0; j < coeffs.size(); ++j) {
            t.add({std::to_string(en), tuple, std::to_string(j)}, coeffs[j]);
          }
        }
      } else {
        t.columns = {"n", "l", "r", "v"};
        t.add({std::to_string(en), std::to_string(el), std::to_string(er), std::to_string(ev)}, esh(en, el, er, ev));
      }
      write_table(out, t, format);
      return 0;
    }

    if (enumerate->parsed()) {
      require_natural(enum_n, "--n");
      require_natural(enum_l, "--l");
      if (enum_format == "text") {
        for (const auto& s : enumerate_subsets(enum_n, enum_l)) {
          out << to_string(s) << '\n';
        }
        return 0;
      }
      Table t{"enum", {"index", "tuple"}, {}, {}, false};
      int index = 1;
      for (const auto& s : enumerate_subsets(enum_n, enum_l)) {
        t.add({std::to_string(index++), to_string(s)}, Rational(rank_value(s)));
      }
      t.notes.push_back("exact holds the base-" + std::to_string(enum_n) + " rank of each tuple");
      write_table(out, t, detail::parse_format(enum_format));
      return 0;
    }

    const auto reports = run_all(max_n, detail::split_ids(only_text));
    const auto failures =
        static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.ok(); }));
    if (verify_format == "json") {
      nlohmann::ordered_json doc;
      doc["max_n"] = max_n;
      doc["identities"] = reports.size();
      doc["failures"] = failures;
      doc["reports"] = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        doc["reports"].push_back(detail::report_json(r));
      }
      out << doc.dump(2) << '\n';
    } else {
      for (const auto& r : reports) {
        out << r.id << ' ' << (r.ok() ? "PASS" : "FAIL") << ' ' << r.passed << '/' << r.checked;
        if (r.first_failure) {
          const auto& w = *r.first_failure;
          out << " at " << to_string(w.params);
          if (w.lhs) {
            out << " lhs=" << to_string(*w.lhs);
          }
          if (w.rhs) {
            out << " rhs=" << to_string(*w.rhs);
          }
          if (!w.error.empty()) {
            out << " error: " << w.error;
          }
        }
        out << '\n';
      }
      out << reports.size() << " identities, " << failures << " failing\n";
    }
    return failures == 0 ? 0 : 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ffcalc::cli
