// kzk: command-line front end over the C interface.
//
// Exit codes: 0 pass or positive verdict, 1 NOT verdict or failed check,
// 2 errors (bad input, missing aut line, resource cap).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kzk/kzk.h"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNot = 1;
constexpr int kExitError = 2;

struct Options {
  std::string file;
  std::size_t max_degree = 8;
  std::uint64_t cap = std::uint64_t{1} << 20;
  std::string field;
  bool json_out = false;
  std::string out_file;
  std::string element;
  bool left = false;
  bool transfer = false;
};

struct CommandError {
  kzk_status status;
  std::string message;
};

void check(kzk_status st) {
  if (st != KZK_OK) throw CommandError{st, kzk_last_error()};
}

json take_json(char* raw) {
  json doc = json::parse(raw);
  kzk_string_free(raw);
  return doc;
}

class Handle {
 public:
  explicit Handle(const Options& opt) {
    check(kzk_parse_file(opt.file.c_str(), opt.field.empty() ? nullptr : opt.field.c_str(), &p_));
    check(kzk_set_cap(p_, opt.cap));
  }
  ~Handle() { kzk_free(p_); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  const kzk_presentation* get() const { return p_; }

 private:
  kzk_presentation* p_ = nullptr;
};

std::string join(const json& arr, const std::string& sep = " ") {
  std::string out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (k) out += sep;
    out += arr[k].is_string() ? arr[k].get<std::string>() : arr[k].dump();
  }
  return out;
}

std::string polynomial_text(const json& coeffs) {
  std::string out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    long long c = coeffs[j].get<long long>();
    if (c == 0) continue;
    std::string mag = std::to_string(c < 0 ? -c : c);
    std::string mono = j == 0 ? mag : (c == 1 || c == -1 ? "" : mag) + (j == 1 ? "t" : "t^" + std::to_string(j));
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + mono;
    } else {
      out += (c < 0 ? " - " : " + ") + mono;
    }
  }
  return out.empty() ? "0" : out;
}

void line(const std::string& key, const std::string& value) {
  std::printf("%-12s %s\n", key.c_str(), value.c_str());
}

void print_header(const json& doc) {
  line("command", doc["command"]["echo"].get<std::string>());
  const json& pr = doc["presentation"];
  line("algebra", "field " + pr["field"].get<std::string>() + ", gens " + join(pr["gens"]) + ", N = " +
                      pr["degree"].dump() + ", dim R = " + pr["dim_r"].dump());
  for (const auto& rel : pr["relations"]) line("relation", rel.get<std::string>());
}

void print_table(const std::string& title, const json& rows) {
  for (std::size_t n = 0; n < rows.size(); ++n) {
    line(n == 0 ? title : "", "n=" + std::to_string(n) + ": " + (rows[n].empty() ? "-" : join(rows[n])));
  }
}

void print_text(const std::string& command, const json& doc) {
  print_header(doc);
  if (command == "koszul") {
    const json& k = doc["koszul"];
    const bool pass = k["verdict"] == "koszul-up-to-cutoff";
    line("verdict", pass ? "koszul-up-to-" + k["cutoff"].dump() : "not-koszul");
    if (!pass) {
      const json& w = k["witness"];
      line("witness", "H_" + w["homological_degree"].dump() + " in internal degree " + w["internal_degree"].dump() +
                          " has dimension " + w["dim"].dump());
    }
    print_table("homology", k["homology_table"]);
  } else if (command == "gldim") {
    const json& g = doc["gldim"];
    if (g["verdict"] == "finite") {
      line("gldim", g["value"].dump());
      line("vanishing", "A^!*_" + g["vanishing_index"].dump() + " = 0");
    } else {
      line("gldim", g["verdict"].get<std::string>());
    }
  } else if (command == "hilbert") {
    line("hilbert", join(doc["hilbert"], ", "));
  } else if (command == "poincare") {
    const json& p = doc["poincare"];
    line("hilbert", join(p["hilbert"], ", "));
    line("dual poly", polynomial_text(p["dual_poly"]));
    line("residual", polynomial_text(p["residual"]) + " through t^" + p["cutoff"].dump());
    line("verdict", p["passed"].get<bool>() ? "identity holds" : "identity fails");
  } else if (command == "semicross") {
    for (const auto& rel : doc["twist"]["relations_out"]) line("semicross", rel.get<std::string>());
    if (doc["twist"].contains("written")) line("written", doc["twist"]["written"].get<std::string>());
  } else if (command == "twist-iso") {
    const json& t = doc["twist"]["iso_check"];
    for (const auto& rel : doc["twist"]["relations_out"]) line("semicross", rel.get<std::string>());
    line("duals", t["duals_match"].get<bool>() ? "theta maps duals onto duals" : "mismatch");
    line("invertible", t["invertible"].get<bool>() ? "yes" : "no");
    line("chain map", t["chain_map"].get<bool>() ? "identity holds" : "identity fails");
    line("homology", t["homology_match"].get<bool>() ? "tables agree" : "tables differ");
    line("bidegrees", t["bidegrees_checked"].dump());
    if (!t["failure"].is_null()) {
      line("failure", t["failure"]["kind"].get<std::string>() + " at (m, i) = (" + t["failure"]["m"].dump() +
                          ", " + t["failure"]["i"].dump() + ")");
    }
    line("verdict", t["passed"].get<bool>() ? "pass" : "fail");
  } else if (command == "gorenstein") {
    const json& g = doc["gorenstein"];
    line("gldim", g["gldim"]["verdict"] == "finite" ? g["gldim"]["value"].dump()
                                                    : g["gldim"]["verdict"].get<std::string>());
    if (!g["warning"].is_null()) line("warning", g["warning"].get<std::string>());
    line("verdict", g["verdict"].get<std::string>());
    if (!g["witness"].is_null()) {
      const json& w = g["witness"];
      line("witness", "H^" + w["q"].dump() + " at weight " + w["weight"].dump() + " (values in A_" +
                          w["value_degree"].dump() + ") has dimension " + w["dim"].dump() + ", " +
                          w["kind"].get<std::string>());
    }
    line("top total", g["top_total"].dump() + (g["top_is_line"].get<bool>() ? " (one line)" : ""));
    bool first = true;
    for (const auto& row : g["h_table"]) {
      std::string cells;
      for (const auto& d : row["dims"]) cells += (cells.empty() ? "" : " ") + (d.is_null() ? std::string("?") : d.dump());
      line(first ? "cohomology" : "", "w=" + row["weight"].dump() + ": " + cells);
      first = false;
    }
    if (g.contains("transfer")) {
      const json& t = g["transfer"];
      line("transfer", t["passed"].get<bool>() ? "tables agree (" + t["entries_compared"].dump() + " entries)"
                                              : "tables differ");
    }
  } else if (command == "regular") {
    const json& r = doc["regular"];
    line("element", r["element"].get<std::string>() + " (" + r["side"].get<std::string>() + ")");
    line("kernels", join(r["kernel_dims"], ", "));
    line("verdict", r["regular"].get<bool>() ? "regular through degree " + r["cutoff"].dump()
                                             : "not regular at degree " + r["first_failure"].dump());
  }
}

std::string echo(const std::string& command, const Options& opt, bool degree_flag) {
  std::string out = command;
  if (degree_flag) out += " --max-degree " + std::to_string(opt.max_degree);
  if (!opt.field.empty()) out += " --field '" + opt.field + "'";
  if (!opt.element.empty()) out += " --element '" + opt.element + "'";
  if (opt.left) out += " --left";
  if (opt.transfer) out += " --transfer";
  if (!opt.out_file.empty()) out += " --out " + opt.out_file;
  return out + " " + opt.file;
}

int run(const std::string& command, const Options& opt) {
  Handle h(opt);
  json doc;
  char* summary = nullptr;
  check(kzk_summary(h.get(), &summary));
  doc["presentation"] = take_json(summary);
  bool degree_flag = true;
  int code = kExitPass;
  char* raw = nullptr;
  int ok = 0;

  if (command == "koszul") {
    check(kzk_check_koszul(h.get(), opt.max_degree, &ok, &raw));
    doc["koszul"] = take_json(raw);
  } else if (command == "gldim") {
    degree_flag = false;
    int finite = 0;
    check(kzk_global_dimension(h.get(), &finite, nullptr, &raw));
    doc["gldim"] = take_json(raw);
    ok = 1;
    if (!finite && doc["gldim"]["verdict"] == "exceeds-cap") code = kExitError;
  } else if (command == "hilbert") {
    check(kzk_hilbert(h.get(), opt.max_degree, nullptr, &raw));
    doc["hilbert"] = take_json(raw);
    ok = 1;
  } else if (command == "poincare") {
    check(kzk_poincare(h.get(), opt.max_degree, &ok, &raw));
    doc["poincare"] = take_json(raw);
  } else if (command == "semicross") {
    degree_flag = false;
    check(kzk_semicross(h.get(), nullptr, &raw));
    json t = take_json(raw);
    if (!opt.out_file.empty()) {
      std::ofstream out(opt.out_file);
      out << t["file"].get<std::string>();
      if (!out) throw CommandError{KZK_ERR_IO, "cannot write " + opt.out_file};
      t["written"] = opt.out_file;
    }
    doc["twist"] = std::move(t);
    ok = 1;
  } else if (command == "twist-iso") {
    check(kzk_twist_iso(h.get(), opt.max_degree, &ok, &raw));
    doc["twist"] = take_json(raw);
  } else if (command == "gorenstein") {
    check(kzk_gorenstein(h.get(), opt.max_degree, opt.transfer ? 1 : 0, &ok, &raw));
    doc["gorenstein"] = take_json(raw);
  } else if (command == "regular") {
    // the library takes any homogeneous element; the CLI sticks to linear ones
    std::size_t element_degree = 0;
    check(kzk_element_degree(h.get(), opt.element.c_str(), &element_degree));
    if (element_degree != 1)
      throw CommandError{KZK_ERR_INVALID_ARGUMENT, "--element must be a linear combination of generators"};
    check(kzk_regularity(h.get(), opt.element.c_str(), opt.left ? 1 : 0, opt.max_degree, &ok, &raw));
    doc["regular"] = take_json(raw);
  }
  if (code == kExitPass && !ok) code = kExitNot;
  doc["command"] = {{"name", command}, {"echo", echo(command, opt, degree_flag)}, {"exit_code", code}};
  if (opt.json_out) {
    std::cout << doc.dump(2) << "\n";
  } else {
    print_text(command, doc);
    if (command == "semicross" && opt.out_file.empty()) std::cout << "\n" << doc["twist"]["file"].get<std::string>();
    if (command == "gldim" && code == kExitError) std::cerr << "kzk: resource cap reached before A^!*_i vanished\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul, Gorenstein and semi-cross checks for N-homogeneous algebras"};
  app.require_subcommand(1);
  Options opt;

  struct Spec {
    const char* name;
    const char* help;
    bool degree;
  };
  const std::vector<Spec> specs = {
      {"koszul", "acyclicity of the contracted Koszul complex up to --max-degree", true},
      {"gldim", "global dimension from the first vanishing A^!*_i", false},
      {"hilbert", "dim A_n for n <= --max-degree", true},
      {"poincare", "P_A(t) times the dual polynomial, compared with 1", true},
      {"semicross", "relations of the semi-cross product by the aut line", false},
      {"twist-iso", "K(theta) chain isomorphism between K(A^alpha) and K(A)", true},
      {"gorenstein", "cohomology of the dual complex by weight", true},
      {"regular", "kernels of multiplication by an element", true},
  };
  std::vector<CLI::App*> subs;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("file", opt.file, "presentation file")->required();
    sub->add_option("--field", opt.field, "override the field: Q or 'F p'");
    sub->add_option("--cap", opt.cap, "largest ambient dimension dim(E)^n allowed")->capture_default_str();
    sub->add_flag("--json", opt.json_out, "print the machine-readable report");
    if (s.degree) {
      sub->add_option("--max-degree", opt.max_degree, "truncation degree")->capture_default_str();
    }
    if (std::string(s.name) == "semicross") sub->add_option("--out", opt.out_file, "write the new presentation here");
    if (std::string(s.name) == "regular") {
      sub->add_option("--element", opt.element, "element to test, e.g. x")->required();
      sub->add_flag("--left", opt.left, "test left multiplication instead");
    }
    if (std::string(s.name) == "gorenstein") {
      sub->add_flag("--transfer", opt.transfer, "also compare against the semi-cross product");
    }
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  std::string command;
  for (auto* sub : subs) {
    if (sub->parsed()) command = sub->get_name();
  }
  try {
    return run(command, opt);
  } catch (const CommandError& e) {
    std::cerr << "kzk: " << kzk_status_name(e.status) << " error: " << e.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "kzk: " << e.what() << "\n";
    return kExitError;
  }
}
