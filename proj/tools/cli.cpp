#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>

#include "cbirk/errors.hpp"
#include "cbirk/json_io.hpp"
#include "cbirk/polytope.hpp"
#include "cbirk/sweep.hpp"

namespace cbirk::cli {

namespace {

struct RunConfig {
  int n = 0;
  std::string c, word, perm;
  std::string format = "json";
  int parallel = 0;
  int guard = 0;  // 0: per-command default
  bool sweep = false;
};

constexpr int kStructuralGuard = 8;
constexpr int kSweepGuard = 6;

void check_guard(const RunConfig& cfg, int fallback) {
  const int limit = cfg.guard > 0 ? cfg.guard : fallback;
  if (cfg.n > limit)
    throw GuardExceeded("n = " + std::to_string(cfg.n) + " exceeds guard " + std::to_string(limit) +
                        " (raise with --guard)");
}

CoxeterElement need_c(const RunConfig& cfg) {
  if (cfg.c.empty()) throw InvalidInput("--c is required");
  return CoxeterElement::from_word(Word(cfg.n, parse_letters(cfg.c)));
}

Word need_word(const RunConfig& cfg) {
  if (cfg.word.empty()) throw InvalidInput("--word is required");
  return Word(cfg.n, parse_letters(cfg.word));
}

std::optional<Permutation> maybe_perm(const RunConfig& cfg) {
  if (cfg.perm.empty()) return std::nullopt;
  Permutation w(parse_letters(cfg.perm));
  if (w.rank() != cfg.n) throw InvalidInput("--perm has the wrong size for --n");
  return w;
}

bool text(const RunConfig& cfg) { return cfg.format == "text"; }

void print_matrix_text(std::ostream& out, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

int cmd_singletons(const RunConfig& cfg, std::ostream& out) {
  check_guard(cfg, kStructuralGuard);
  const CoxeterElement c = need_c(cfg);
  const auto singles = singletons(c);
  if (text(cfg)) {
    for (const auto& s : singles) out << s.perm.to_string() << '\n';
    return kOk;
  }
  Json list = Json::array();
  for (const auto& s : singles) {
    Json e;
    e["perm"] = s.perm.to_string();
    e["sort_word"] = c_sorting_word(c, s.perm).to_string();
    e["ideal"] = s.ideal.members();
    list.push_back(e);
  }
  Json j;
  j["c"] = c.to_string();
  j["n"] = cfg.n;
  j["count"] = singles.size();
  j["singletons"] = list;
  out << j.dump() << '\n';
  return kOk;
}

int cmd_heap(const RunConfig& cfg, std::ostream& out) {
  check_guard(cfg, kStructuralGuard);
  Heap h = cfg.c.empty() ? heap_of_word(need_word(cfg)) : heap_grid(need_c(cfg));
  if (text(cfg)) {
    for (int x = 1; x <= h.size(); ++x) {
      out << x << " s" << h.label(x);
      if (h.coords()) out << " (" << (*h.coords())[x - 1].a << "," << (*h.coords())[x - 1].b << ")";
      out << '\n';
    }
    for (auto [a, b] : h.covers()) out << a << " < " << b << '\n';
    return kOk;
  }
  Json j = to_json(h);
  j["canonical_word"] = canonical_word(h.word()).to_string();
  out << j.dump() << '\n';
  return kOk;
}

int cmd_sortword(const RunConfig& cfg, std::ostream& out) {
  check_guard(cfg, kStructuralGuard);
  const CoxeterElement c = need_c(cfg);
  const Permutation w = maybe_perm(cfg).value_or(Permutation::longest(cfg.n));
  const SortingWord sw = c_sorting(c, w);
  const bool sortable = is_c_sortable(c, w);
  const bool single = is_c_singleton(c, w);
  if (text(cfg)) {
    for (std::size_t k = 0; k < sw.blocks.size(); ++k) {
      if (k) out << '|';
      for (int q : sw.blocks[k]) out << q << (q > 9 ? "," : "");
    }
    out << '\n' << (sortable ? "sortable" : "not sortable") << ", "
        << (single ? "singleton" : "not singleton") << '\n';
    return kOk;
  }
  Json j;
  j["c"] = c.to_string();
  j["perm"] = w.to_string();
  j["word"] = sw.word.to_string();
  j["blocks"] = sw.blocks;
  j["sortable"] = sortable;
  j["singleton"] = single;
  out << j.dump() << '\n';
  return kOk;
}

int cmd_relations(const RunConfig& cfg, std::ostream& out) {
  check_guard(cfg, kSweepGuard);
  const CoxeterElement c = need_c(cfg);
  const auto rels = independent_relation_set(c);
  const RelationReport rep = check_relations(c);
  if (text(cfg)) {
    for (const auto& r : rels) {
      out << to_string(r.kind) << "(" << r.params[0] << "," << r.params[1] << "):";
      for (const auto& [cell, coef] : r.coeffs) out << " (" << cell.row << "," << cell.col << ")";
      out << " = " << r.rhs.get_str() << '\n';
    }
    out << "rank " << rep.independent_rank << " of " << rep.independent_size
        << (rep.ok ? ", all relations hold" : ", FAILED: " + rep.failure) << '\n';
  } else {
    Json list = Json::array();
    for (const auto& r : rels) list.push_back(to_json(r));
    Json j;
    j["c"] = c.to_string();
    j["relations"] = list;
    j["report"] = to_json(rep);
    out << j.dump() << '\n';
  }
  return rep.ok ? kOk : kViolation;
}

int cmd_project(const RunConfig& cfg, std::ostream& out) {
  check_guard(cfg, kStructuralGuard);
  const CoxeterElement c = need_c(cfg);
  const ProjectionIndex p = projection_indices(c);
  const auto w = maybe_perm(cfg);
  std::vector<Integer> v;
  if (w) v = project(p, permutation_matrix(*w));
  if (text(cfg)) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      out << k + 1 << " (" << p.entries()[k].row << "," << p.entries()[k].col << ")";
      if (w) out << " " << v[k];
      out << '\n';
    }
    return kOk;
  }
  Json j;
  j["c"] = c.to_string();
  Json cells = Json::array();
  for (Cell e : p.entries()) cells.push_back({e.row, e.col});
  j["indices"] = cells;
  if (w) {
    j["perm"] = w->to_string();
    Json vec = Json::array();
    for (const auto& x : v) vec.push_back(x.get_si());
    j["vector"] = vec;
  }
  out << j.dump() << '\n';
  return kOk;
}

int cmd_umatrix(const RunConfig& cfg, std::ostream& out) {
  check_guard(cfg, kStructuralGuard);
  const CoxeterElement c = need_c(cfg);
  const IntMatrix u = compute_U(c);
  if (text(cfg)) {
    print_matrix_text(out, u);
    return kOk;
  }
  Json j;
  j["c"] = c.to_string();
  j["N"] = u.rows();
  j["U"] = to_json(u);
  out << j.dump() << '\n';
  return kOk;
}

int emit_certificates(const RunConfig& cfg, const std::vector<TransferCertificate>& certs,
                      std::ostream& out) {
  bool ok = std::all_of(certs.begin(), certs.end(), [](const auto& t) { return t.ok; });
  if (text(cfg)) {
    for (const auto& t : certs)
      out << t.c.to_string() << " N=" << t.N << " singletons=" << t.singletons
          << " volume=" << t.volume << (t.ok ? " ok" : " FAILED: " + t.failure) << '\n';
  } else if (certs.size() == 1 && !cfg.sweep) {
    out << certificate_json(certs.front()).dump() << '\n';
  } else {
    Json list = Json::array();
    for (const auto& t : certs) list.push_back(certificate_json(t));
    out << list.dump() << '\n';
  }
  return ok ? kOk : kViolation;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.sweep) {
    check_guard(cfg, kSweepGuard);
    auto certs = cfg.parallel > 0 ? verify_sweep_parallel(cfg.n, cfg.parallel)
                                  : verify_sweep_serial(cfg.n);
    return emit_certificates(cfg, certs, out);
  }
  check_guard(cfg, kStructuralGuard);
  return emit_certificates(cfg, {verify_main_theorem(need_c(cfg))}, out);
}

int cmd_volume(const RunConfig& cfg, std::ostream& out) {
  check_guard(cfg, kStructuralGuard);
  Heap h = cfg.c.empty() ? heap_of_word(need_word(cfg)) : heap_grid(need_c(cfg));
  const Integer v = normalized_volume(h);
  if (text(cfg))
    out << v << '\n';
  else
    out << Json{{"volume", v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str())}}.dump() << '\n';
  return kOk;
}

int cmd_q81(const RunConfig& cfg, std::ostream& out) {
  check_guard(cfg, kStructuralGuard);
  const Q81Report rep = question81_probe(need_word(cfg));
  if (text(cfg)) {
    out << rep.word.to_string() << ": " << rep.ideals << " ideals, " << rep.distinct_matrices
        << " matrices, dimension " << rep.cloud_dimension << " vs " << rep.length << ", "
        << to_string(rep.verdict) << '\n';
  } else {
    out << to_json(rep).dump() << '\n';
  }
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  check_guard(cfg, kSweepGuard);
  const bool par = cfg.parallel > 0;
  auto certs = par ? verify_sweep_parallel(cfg.n, cfg.parallel) : verify_sweep_serial(cfg.n);
  auto rels = par ? relation_sweep_parallel(cfg.n, cfg.parallel) : relation_sweep_serial(cfg.n);
  bool ok = true;
  for (std::size_t k = 0; k < certs.size(); ++k) ok = ok && certs[k].ok && rels[k].ok;
  if (text(cfg)) {
    for (std::size_t k = 0; k < certs.size(); ++k)
      out << certs[k].c.to_string() << " transfer=" << (certs[k].ok ? "ok" : "FAILED")
          << " relations=" << (rels[k].ok ? "ok" : "FAILED") << '\n';
  } else {
    Json j;
    j["n"] = cfg.n;
    Json cl = Json::array(), rl = Json::array();
    for (const auto& t : certs) cl.push_back(certificate_json(t));
    for (const auto& r : rels) rl.push_back(to_json(r));
    j["certificates"] = cl;
    j["relations"] = rl;
    j["ok"] = ok;
    out << j.dump() << '\n';
  }
  return ok ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"c-Birkhoff polytopes, heap order polytopes and the transfer between them", "cbirk"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const RunConfig&, std::ostream&);
  };
  const Entry entries[] = {
      {"singletons", "list the c-singletons", cmd_singletons},
      {"heap", "heap of a word (--word) or the grid heap of c (--c)", cmd_heap},
      {"sortword", "c-sorting word of --perm (default w0)", cmd_sortword},
      {"relations", "independent relation set, checked on all singletons", cmd_relations},
      {"project", "projection index order, and the projection of --perm", cmd_project},
      {"umatrix", "the unitriangular transfer matrix", cmd_umatrix},
      {"verify", "certificate for --c, or for every c with --sweep", cmd_verify},
      {"volume", "normalized volume of the order polytope", cmd_volume},
      {"q81", "compare the ideal permutation cloud of --word with its order polytope", cmd_q81},
      {"sweep", "transfer and relation checks for every c of rank n", cmd_sweep},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("--n", cfg.n, "rank")->required()->check(CLI::Range(1, 64));
    sub->add_option("--c", cfg.c, "Coxeter word, e.g. 1432657 or 1,4,3,2,5,7,6,9,8,10");
    sub->add_option("--word", cfg.word, "reduced word");
    sub->add_option("--perm", cfg.perm, "permutation in one-line notation");
    sub->add_option("--format", cfg.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--parallel", cfg.parallel, "worker threads for sweeps")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--guard", cfg.guard, "largest n allowed")->check(CLI::PositiveNumber);
    sub->add_flag("--sweep", cfg.sweep, "run over every Coxeter element of rank n");
    subs.emplace_back(sub, &e);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  for (auto [sub, entry] : subs) {
    if (!sub->parsed()) continue;
    try {
      return entry->fn(cfg, out);
    } catch (const GuardExceeded& e) {
      err << "guard: " << e.what() << '\n';
      return kGuard;
    } catch (const TheoremViolation& e) {
      err << "violation: " << e.what() << ' ' << e.detail() << '\n';
      return kViolation;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
  }
  return kUsage;
}

}  // namespace cbirk::cli
