#pragma once

// Command implementations behind the ifam CLI. Each command builds its whole
// report in memory and returns it with an exit status:
//   0  every check passed
//   1  a check failed (a witness is printed)
//   2  usage or input error

#include <chrono>
#include <ctime>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ifam/bounds.hpp"
#include "ifam/family.hpp"
#include "ifam/family_io.hpp"
#include "ifam/generator.hpp"
#include "ifam/limits.hpp"
#include "ifam/oracle.hpp"
#include "ifam/partition.hpp"

namespace ifam {

struct CommandOutcome {
  int exit_code = 0;
  std::string report;
};

struct CommandOptions {
  std::optional<int> n;
  std::optional<int> k;
  int k_max = 20;
  std::string input;
  std::string output;
  bool oracle = false;
  bool shifted_only = false;
  bool machine = false;
  bool no_timestamp = false;
};

namespace detail {

/// Human mode writes "key: value"; machine mode writes "key=value".
class ReportWriter {
 public:
  explicit ReportWriter(const CommandOptions& opt) : machine_(opt.machine) {
    if (!opt.no_timestamp) {
      const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      std::tm tm{};
      gmtime_r(&now, &tm);
      char buf[32];
      std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
      if (machine_) {
        os_ << "timestamp=" << buf << '\n';
      } else {
        os_ << "# generated " << buf << '\n';
      }
    }
  }

  [[nodiscard]] bool machine() const noexcept { return machine_; }

  void kv(const std::string& key, const std::string& value) {
    os_ << key << (machine_ ? "=" : ": ") << value << '\n';
  }

  /// Free text, human mode only.
  void text(const std::string& line) {
    if (!machine_) os_ << line << '\n';
  }

  /// Always written, both modes.
  void raw(const std::string& line) { os_ << line << '\n'; }

  void check(const std::string& name, bool passed, const std::string& witness = {}) {
    if (machine_) {
      os_ << "check." << slug(name) << '=' << (passed ? "pass" : "fail") << '\n';
      if (!passed && !witness.empty()) os_ << "witness." << slug(name) << '=' << witness << '\n';
    } else {
      os_ << (passed ? "[pass] " : "[FAIL] ") << name;
      if (!passed && !witness.empty()) os_ << " -- witness: " << witness;
      os_ << '\n';
    }
  }

  [[nodiscard]] std::string str() const { return os_.str(); }

 private:
  static std::string slug(const std::string& s) {
    std::string out;
    for (char c : s) {
      if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
        out += c;
      } else if (c >= 'A' && c <= 'Z') {
        out += static_cast<char>(c - 'A' + 'a');
      } else if (!out.empty() && out.back() != '_') {
        out += '_';
      }
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
  }

  bool machine_;
  std::ostringstream os_;
};

inline CommandOutcome usage_error(const std::string& msg) { return {2, "error: " + msg + "\n"}; }

inline std::string join_integers(const std::vector<Integer>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out + "]";
}

/// Name a family if it is one of the named constructions.
inline std::string family_label(const SetFamily& f) {
  const int n = f.n();
  const int k = f.k();
  if (n >= 2 * k && f == star(n, k)) return "star";
  if (k >= 2 && n >= 2 * k && f == hilton_milner(n, k)) return "hm";
  if (k == 3 && f == k3_special(n)) return "k3-special";
  return {};
}

inline std::string extremal_summary(const std::vector<SetFamily>& ext) {
  if (ext.size() == 1) {
    const auto label = family_label(ext.front());
    if (!label.empty()) return label;
  }
  return std::to_string(ext.size()) + " families";
}

inline SetFamily load_single_family(const std::string& path) {
  return parse_family(read_text_file(path));
}

}  // namespace detail

/// Renders the canonical partition and the per-type counting bounds.
inline CommandOutcome cmd_partition(const CommandOptions& opt) {
  if (opt.input.empty()) return detail::usage_error("partition needs --input");
  SetFamily fam;
  try {
    fam = detail::load_single_family(opt.input);
  } catch (const std::exception& e) {
    return detail::usage_error(e.what());
  }

  detail::ReportWriter out(opt);
  out.kv("n", std::to_string(fam.n()));
  out.kv("k", std::to_string(fam.k()));
  out.kv("size", std::to_string(fam.size()));

  TypePartition part;
  try {
    part = partition(fam);
  } catch (const PartitionError& e) {
    out.check("partition", false, to_string(e.witness()));
    out.text(std::string("reason: ") + e.what());
    return {1, out.str()};
  }
  out.check("partition", true);

  const int k = fam.k();
  for (int i = 0; i < k; ++i) {
    const auto& cls = part.classes[static_cast<std::size_t>(i)];
    const auto& proj = part.projections[static_cast<std::size_t>(i)];
    const std::string key = "type." + std::to_string(i);
    out.kv(key + ".members", std::to_string(cls.size()));
    out.kv(key + ".projected", std::to_string(proj.size()));
    for (const auto& s : cls.members()) {
      const auto p = project(s, i);
      out.text("  " + to_string(s) + "  head " + to_string(p.head) + "  tail " + to_string(p.tail));
    }
    std::string heads;
    for (const auto& h : proj.members()) heads += (heads.empty() ? "" : " ") + to_string(h);
    out.kv(key + ".projections", heads.empty() ? "-" : heads);
  }

  if (fam.n() < 2 * k) {
    out.text("bounds: skipped (n < 2k)");
    return {0, out.str()};
  }
  const auto rep = type_bounds_report(fam);
  std::vector<Integer> sizes;
  for (const auto& row : rep.rows) sizes.push_back(row.projected_count);
  out.kv("projected_sizes", detail::join_integers(sizes));
  for (const auto& row : rep.rows) {
    const std::string key = "bound." + std::to_string(row.type);
    out.kv(key + ".member_cap", row.member_cap.str());
    if (row.projected_cap) out.kv(key + ".projected_cap", row.projected_cap->str());
    if (row.full_cap) out.kv(key + ".full_cap", row.full_cap->str());
    out.check("type " + std::to_string(row.type) + " bounds",
              row.member_ok && row.projected_ok && row.full_ok,
              "|F_i|=" + row.member_count.str());
  }
  out.kv("projected_sum", rep.projected_sum.str());
  out.kv("sum_cap", rep.sum_cap.str());
  out.check("projected sum within cap", rep.sum_ok, rep.projected_sum.str());
  return {rep.all_ok() ? 0 : 1, out.str()};
}

inline void render_verification(detail::ReportWriter& out, const VerificationReport& rep) {
  if (out.machine()) {
    out.kv("theorem", rep.theorem);
    out.kv("n", std::to_string(rep.n));
    out.kv("k", std::to_string(rep.k));
    out.kv("bound", rep.bound.str());
    out.kv("max", rep.achieved_max.str());
    out.kv("extremal", detail::extremal_summary(rep.extremal));
    out.kv("families_examined", std::to_string(rep.families_examined));
  } else {
    out.raw(rep.theorem + " n=" + std::to_string(rep.n) + " k=" + std::to_string(rep.k));
    out.raw("bound=" + rep.bound.str() + " max=" + rep.achieved_max.str() +
            " extremal=" + detail::extremal_summary(rep.extremal));
    out.text("families examined: " + std::to_string(rep.families_examined));
    for (const auto& f : rep.extremal) out.text("  extremal: " + describe(f));
  }
  for (const auto& c : rep.checks) out.check(c.name, c.passed, c.witness);
  for (const auto& note : rep.notes) out.text("note: " + note);
}

/// kind: "ekr", "hm" or "identities".
inline CommandOutcome cmd_verify(const std::string& kind, const CommandOptions& opt) {
  detail::ReportWriter out(opt);
  if (kind == "identities") {
    if (opt.k_max < 1 || opt.k_max > kMaxGround) {
      return detail::usage_error("--k-max must lie in [1," + std::to_string(kMaxGround) + "]");
    }
    int star_pass = 0;
    int prod_pass = 0;
    int prod_total = 0;
    int classified = 0;
    bool ok = true;
    for (int k = 1; k <= opt.k_max; ++k) {
      const auto r = identity_star(k);
      if (r.passed) {
        ++star_pass;
      } else {
        ok = false;
        out.check("identity_star k=" + std::to_string(k), false, r.lhs.str() + " != " + r.rhs.str());
      }
    }
    for (int k = 1; k <= opt.k_max; ++k) {
      for (int n = 2 * k; n <= 3 * k + 20; ++n) {
        ++prod_total;
        const auto r = identity_product(n, k);
        if (r.classification_passed) ++classified;
        if (r.passed) {
          ++prod_pass;
        } else {
          ok = false;
          out.check("identity_product n=" + std::to_string(n) + " k=" + std::to_string(k), false,
                    r.lhs.str() + " vs " + r.rhs.str());
        }
      }
    }
    out.kv("identity_star", std::to_string(star_pass) + "/" + std::to_string(opt.k_max));
    out.kv("identity_product", std::to_string(prod_pass) + "/" + std::to_string(prod_total));
    out.kv("classified", std::to_string(classified));
    out.check("identities", ok);
    return {ok ? 0 : 1, out.str()};
  }

  if (kind != "ekr" && kind != "hm") return detail::usage_error("unknown verify kind '" + kind + "'");
  if (!opt.n || !opt.k) return detail::usage_error("verify " + kind + " needs --n and --k");
  VerificationReport rep;
  try {
    rep = kind == "ekr" ? verify_ekr(*opt.n, *opt.k) : verify_hm(*opt.n, *opt.k);
  } catch (const std::invalid_argument& e) {
    return detail::usage_error(e.what());
  }
  render_verification(out, rep);
  return {rep.all_passed() ? 0 : 1, out.str()};
}

/// Writes every maximal shifted intersecting family (generator path), or the
/// oracle's list with --oracle, and compares the two when the oracle runs.
inline CommandOutcome cmd_enumerate(const CommandOptions& opt) {
  if (!opt.n || !opt.k) return detail::usage_error("enumerate needs --n and --k");
  const int n = *opt.n;
  const int k = *opt.k;
  std::vector<SetFamily> generated;
  std::vector<SetFamily> oracle;
  try {
    generated = enumerate_maximal_shifted(n, k);
    if (opt.oracle) oracle = brute_force_maximal(n, k, opt.shifted_only);
  } catch (const std::invalid_argument& e) {
    return detail::usage_error(e.what());
  }

  detail::ReportWriter out(opt);
  out.kv("n", std::to_string(n));
  out.kv("k", std::to_string(k));
  out.kv("generators", std::to_string(generated.size()));
  int code = 0;
  const std::vector<SetFamily>* written = &generated;
  if (opt.oracle) {
    std::vector<SetFamily> oracle_shifted;
    for (const auto& f : oracle) {
      if (is_shifted(f)) oracle_shifted.push_back(f);
    }
    const bool same = oracle_shifted == generated;
    out.kv("oracle_families", std::to_string(oracle.size()));
    out.kv("oracle_shifted", std::to_string(oracle_shifted.size()));
    out.raw(std::string(out.machine() ? "generator_path_equals_oracle=" : "generator-path == oracle: ") +
            (same ? "yes" : "no"));
    if (!same) code = 1;
    written = &oracle;
  }
  out.kv("families", std::to_string(written->size()));

  const auto body = serialize_families(n, k, *written);
  if (!opt.output.empty()) {
    try {
      write_text_file(opt.output, body);
    } catch (const std::exception& e) {
      return detail::usage_error(e.what());
    }
    out.kv("output", opt.output);
  } else {
    out.text("");
    out.text(body);
  }
  return {code, out.str()};
}

/// Shift closure of one family, with size and intersecting preservation checks.
inline CommandOutcome cmd_shift(const CommandOptions& opt) {
  if (opt.input.empty()) return detail::usage_error("shift needs --input");
  SetFamily fam;
  try {
    fam = detail::load_single_family(opt.input);
  } catch (const std::exception& e) {
    return detail::usage_error(e.what());
  }
  const auto closed = shift_closure(fam);
  const bool was_intersecting = is_intersecting(fam);
  const bool now_intersecting = is_intersecting(closed);

  detail::ReportWriter out(opt);
  out.kv("size", std::to_string(fam.size()));
  out.kv("already_shifted", closed == fam ? "yes" : "no");
  out.kv("intersecting_before", was_intersecting ? "yes" : "no");
  out.kv("intersecting_after", now_intersecting ? "yes" : "no");
  const bool size_ok = closed.size() == fam.size();
  const bool inter_ok = !was_intersecting || now_intersecting;
  const bool shifted_ok = is_shifted(closed);
  out.check("size preserved", size_ok);
  out.check("intersecting preserved", inter_ok);
  out.check("result shifted", shifted_ok);

  const auto body = serialize_family(closed);
  if (!opt.output.empty()) {
    try {
      write_text_file(opt.output, body);
    } catch (const std::exception& e) {
      return detail::usage_error(e.what());
    }
    out.kv("output", opt.output);
  } else {
    out.text("");
    out.text(body);
  }
  return {size_ok && inter_ok && shifted_ok ? 0 : 1, out.str()};
}

}  // namespace ifam
