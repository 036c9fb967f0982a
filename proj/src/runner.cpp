#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "gpif/session.hpp"
#include "gpif/zfinite.hpp"

namespace gpif {

namespace {

using nlohmann::json;

// ---- serialization -------------------------------------------------------

json prime_json(const PrimeIdeal& p, const std::vector<std::string>& names) {
  if (p.tag == BackendTag::Integer) return p.p;
  json arr = json::array();
  for (int v : p.vars)
    arr.push_back(static_cast<std::size_t>(v) < names.size() ? names[static_cast<std::size_t>(v)]
                                                             : "x" + std::to_string(v));
  return arr;
}

PrimeIdeal prime_from_json(const json& j, const std::vector<std::string>& names) {
  if (j.is_number()) return PrimeIdeal::integer(j.get<std::int64_t>());
  std::vector<int> vars;
  for (const auto& v : j) {
    auto name = v.get<std::string>();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw PreconditionError("unknown variable '" + name + "' in prime");
    vars.push_back(static_cast<int>(it - names.begin()));
  }
  return PrimeIdeal::monomial(std::move(vars));
}

json factor_json(const FactorizationMultiset& f, const std::vector<std::string>& names) {
  json arr = json::array();
  for (auto& [p, m] : f.entries())
    arr.push_back(json{{"prime", prime_json(p, names)}, {"multiplicity", m}});
  return arr;
}

json sub_json(const MonomialBackend& b, const MonomialSubmodule& n) {
  json comps = json::array();
  for (auto& c : n.comps) {
    json gens = json::array();
    for (auto& g : c.gens()) gens.push_back(g.to_string(b.names()));
    comps.push_back(gens);
  }
  return json{{"components", comps}};
}

json sub_json(const ZBackend&, const ZSubmodule& n) {
  json cols = json::array();
  for (int j = 0; j < n.lattice.cols(); ++j) {
    json col = json::array();
    for (int i = 0; i < n.lattice.rows(); ++i) col.push_back(n.lattice.at(i, j).str());
    cols.push_back(col);
  }
  return json{{"generators", cols}};
}

Monomial parse_monomial_str(const std::string& text, const std::vector<std::string>& names) {
  std::vector<int> e(names.size(), 0);
  if (text == "1") return Monomial(std::move(e));
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    std::string var = factor;
    int exp = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      var = factor.substr(0, caret);
      exp = std::stoi(factor.substr(caret + 1));
    }
    auto it = std::find(names.begin(), names.end(), var);
    if (it == names.end()) throw PreconditionError("unknown variable '" + var + "'");
    e[static_cast<std::size_t>(it - names.begin())] += exp;
  }
  return Monomial(std::move(e));
}

MonomialSubmodule sub_from_json(const MonomialBackend& b, const json& j) {
  std::vector<MonomialIdeal> comps;
  for (const auto& comp : j.at("components")) {
    std::vector<Monomial> gens;
    for (const auto& g : comp) gens.push_back(parse_monomial_str(g.get<std::string>(), b.names()));
    comps.emplace_back(b.vars(), std::move(gens));
  }
  return b.make(std::move(comps));
}

ZSubmodule sub_from_json(const ZBackend& b, const json& j) {
  std::vector<std::vector<Int>> cols;
  for (const auto& col : j.at("generators")) {
    std::vector<Int> c;
    for (const auto& x : col)
      c.emplace_back(x.is_string() ? Int(x.get<std::string>()) : Int(x.get<std::int64_t>()));
    cols.push_back(std::move(c));
  }
  return b.make(cols);
}

// ---- environment ---------------------------------------------------------

template <class B>
struct Object {
  std::string module_name;  // "R" for ideals embedded in the rank-1 ring
  B backend;
  typename B::Sub sub;
};

template <class B>
struct Env {
  std::vector<std::string> names;  // ring variable names (empty for Z)
  std::map<std::string, B> modules;
  std::map<std::string, Object<B>> objects;

  const Object<B>& get(const std::string& name) const {
    auto it = objects.find(name);
    if (it == objects.end()) throw PreconditionError("unknown object '" + name + "'");
    return it->second;
  }
};

Env<MonomialBackend> build_mono_env(const Session& s) {
  Env<MonomialBackend> env;
  env.names = s.ring_vars;
  const int d = static_cast<int>(s.ring_vars.size());
  for (const auto& st : s.statements) {
    if (st.kind == Statement::Kind::Ideal) {
      MonomialBackend ring(d, 1, s.ring_vars);
      env.objects.emplace(st.name,
                          Object<MonomialBackend>{"R", ring,
                                                  ring.embed_ideal(MonomialIdeal(d, st.ideal_gens))});
    } else if (st.kind == Statement::Kind::Module) {
      env.modules.emplace(st.name, MonomialBackend(d, st.rank, s.ring_vars));
    } else if (st.kind == Statement::Kind::Sub) {
      const MonomialBackend& m = env.modules.at(st.parent);
      std::vector<std::vector<Monomial>> per_comp(static_cast<std::size_t>(m.rank()));
      for (const auto& col : st.mono_columns)
        for (std::size_t i = 0; i < col.size(); ++i)
          if (col[i]) per_comp[i].push_back(*col[i]);
      std::vector<MonomialIdeal> comps;
      for (auto& gens : per_comp) comps.emplace_back(d, std::move(gens));
      env.objects.emplace(st.name, Object<MonomialBackend>{st.parent, m, m.make(std::move(comps))});
    }
  }
  return env;
}

Env<ZBackend> build_z_env(const Session& s) {
  Env<ZBackend> env;
  for (const auto& st : s.statements) {
    if (st.kind == Statement::Kind::Module) {
      std::vector<std::vector<Int>> rel_cols = st.relations;
      env.modules.emplace(st.name, ZBackend(st.rank, IntMatrix::from_columns(st.rank, rel_cols)));
    } else if (st.kind == Statement::Kind::Sub) {
      const ZBackend& m = env.modules.at(st.parent);
      env.objects.emplace(st.name, Object<ZBackend>{st.parent, m, m.make(st.z_columns)});
    }
  }
  return env;
}

// ---- oracle cross-checks (Z ring only) -----------------------------------

void oracle_disagree(const std::string& what) {
  throw InternalVerificationError("oracle disagreement on " + what);
}

template <class B>
void oracle_check(const Statement&, const Env<B>&, const RunOptions&, std::ostream&) {}

void oracle_check(const Statement& st, const Env<ZBackend>& env, const RunOptions& opts,
                  std::ostream& out) {
  static const std::vector<std::string> kChecked = {"factor", "ass", "colon", "ann", "intersect"};
  if (std::find(kChecked.begin(), kChecked.end(), st.verb) == kChecked.end()) return;
  const auto& obj = env.get(st.args[0]);
  auto bridge = FiniteBridge::make(obj.backend, opts.oracle_bound);
  if (!bridge) {
    out << "oracle: skipped (module infinite or above the size bound)\n";
    return;
  }
  const FiniteModule& fm = bridge->module();
  FiniteSubmodule n = bridge->map_sub(obj.sub);

  if (st.verb == "factor") {
    auto filts = all_rpe_filtrations(fm, n);
    FactorizationMultiset engine = factorization(obj.backend, obj.sub);
    for (auto& f : filts)
      if (!multiset_equal(oracle_factorization(f), engine)) oracle_disagree("factor");
  } else if (st.verb == "ass") {
    auto engine = obj.backend.ass(obj.sub);
    auto expect = brute_ass(fm, n);
    std::vector<PrimeIdeal> expect_p;
    for (auto p : expect) expect_p.push_back(PrimeIdeal::integer(p));
    if (engine != expect_p) oracle_disagree("ass");
  } else if (st.verb == "colon" && st.prime_arg) {
    auto engine = bridge->map_sub(obj.backend.colon_prime(obj.sub, *st.prime_arg));
    FiniteSubmodule expect;
    for (int x = 0; x < fm.size(); ++x)
      if (n.contains(fm.smul(st.prime_arg->p, x))) expect.elems.push_back(x);
    if (!(engine == expect)) oracle_disagree("colon");
  } else if (st.verb == "ann") {
    Int engine = obj.backend.exponent(obj.sub);
    FiniteSubmodule whole = bridge->map_sub(obj.backend.whole());
    if (engine != colon_int(fm, n, whole)) oracle_disagree("ann");
  } else if (st.verb == "intersect") {
    const auto& other = env.get(st.args[1]);
    auto engine = bridge->map_sub(obj.backend.intersect(obj.sub, other.sub));
    if (!(engine == intersect(n, bridge->map_sub(other.sub)))) oracle_disagree("intersect");
  }
  out << "oracle: agree\n";
}

// ---- command execution ----------------------------------------------------

template <class B>
json filtration_json(const Object<B>& obj, const Filtration<typename B::Sub>& f,
                     const std::vector<std::string>& names) {
  json steps = json::array();
  for (auto& [p, sub] : f.steps)
    steps.push_back(json{{"prime", prime_json(p, names)}, {"submodule", sub_json(obj.backend, sub)}});
  return json{{"module", obj.module_name},
              {"base", sub_json(obj.backend, f.base)},
              {"steps", steps}};
}

// MonomialBackend has variable names, ZBackend does not; small shim so the
// generic code can print primes either way.
const std::vector<std::string>& names_of(const MonomialBackend& b) { return b.names(); }
const std::vector<std::string>& names_of(const ZBackend&) {
  static const std::vector<std::string> empty;
  return empty;
}

template <class B>
int exec_commands(const Session& s, const Env<B>& env, const RunOptions& opts, std::ostream& out) {
  for (const auto& st : s.statements) {
    if (st.kind != Statement::Kind::Command) continue;
    const auto& names = env.names;
    json record{{"command", st.verb}, {"inputs", st.args}};
    if (st.prime_arg) record["inputs"].push_back(show_prime(*st.prime_arg, names));
    std::string text;

    if (st.verb == "factor") {
      const auto& obj = env.get(st.args[0]);
      auto f = rpe_filtration(obj.backend, obj.sub, opts.tie, opts.seed);
      auto fm = f.factor_multiset();
      text = "P(" + st.args[0] + ") = " + fm.to_string(names);
      record["result"] = factor_json(fm, names);
    } else if (st.verb == "filtration") {
      const auto& obj = env.get(st.args[0]);
      auto f = rpe_filtration(obj.backend, obj.sub, opts.tie, opts.seed);
      text = obj.backend.show(f.base);
      for (auto& [p, sub] : f.steps)
        text += " ⊂[" + show_prime(p, names_of(obj.backend)) + "] " + obj.backend.show(sub);
      record["result"] = filtration_json(obj, f, names);
    } else if (st.verb == "ass") {
      const auto& obj = env.get(st.args[0]);
      auto ass = obj.backend.ass(obj.sub);
      text = "Ass(M/" + st.args[0] + ") = {";
      json arr = json::array();
      for (std::size_t i = 0; i < ass.size(); ++i) {
        text += (i ? ", " : "") + show_prime(ass[i], names);
        arr.push_back(prime_json(ass[i], names));
      }
      text += "}";
      record["result"] = arr;
    } else if (st.verb == "colon") {
      const auto& obj = env.get(st.args[0]);
      if (st.prime_arg) {
        auto r = obj.backend.colon_prime(obj.sub, *st.prime_arg);
        text = "(" + st.args[0] + " : " + show_prime(*st.prime_arg, names) + ") = " +
               obj.backend.show(r);
        record["result"] = sub_json(obj.backend, r);
      } else {
        const auto& other = env.get(st.args[1]);
        if (obj.module_name != other.module_name)
          throw PreconditionError("colon arguments live in different modules");
        auto r = obj.backend.colon_submodule(obj.sub, other.sub);
        B ring = obj.backend.ring_module();
        text = "(" + st.args[0] + " : " + st.args[1] + ") = " + ring.show(r);
        record["result"] = sub_json(ring, r);
      }
    } else if (st.verb == "intersect") {
      const auto& a = env.get(st.args[0]);
      const auto& b = env.get(st.args[1]);
      if (a.module_name != b.module_name)
        throw PreconditionError("intersect arguments live in different modules");
      auto r = a.backend.intersect(a.sub, b.sub);
      text = st.args[0] + " ∩ " + st.args[1] + " = " + a.backend.show(r);
      record["result"] = sub_json(a.backend, r);
    } else if (st.verb == "ann") {
      const auto& obj = env.get(st.args[0]);
      auto r = obj.backend.annihilator(obj.sub);
      B ring = obj.backend.ring_module();
      text = "ann(M/" + st.args[0] + ") = " + ring.show(r);
      record["result"] = sub_json(ring, r);
    } else if (st.verb == "compare-ann") {
      const auto& obj = env.get(st.args[0]);
      auto v = annihilator_compare(obj.backend, obj.sub);
      text = "P_M(" + st.args[0] + ") = " + v.pm.to_string(names) +
             ", P_R(ann) = " + v.pr.to_string(names) +
             ", multiple=" + (v.multiple ? "true" : "false") +
             ", isolated=" + (v.isolated ? "true" : "false") +
             ", equal=" + (v.equal ? "true" : "false");
      record["result"] = json{{"pm", factor_json(v.pm, names)},
                              {"pr", factor_json(v.pr, names)},
                              {"multiple", v.multiple},
                              {"isolated", v.isolated},
                              {"equal", v.equal}};
    } else if (st.verb == "compare-intersection") {
      const auto& a = env.get(st.args[0]);
      const auto& b = env.get(st.args[1]);
      if (a.module_name != b.module_name)
        throw PreconditionError("compare-intersection arguments live in different modules");
      auto v = factor_intersection(a.backend, a.sub, b.sub);
      text = "P(" + st.args[0] + " ∩ " + st.args[1] + ") = " +
             v.p_intersection.to_string(names) + ", equal=" + (v.equal ? "true" : "false") +
             ", guaranteed=" + (v.guaranteed ? "true" : "false");
      record["result"] = json{{"equal", v.equal},
                              {"guaranteed", v.guaranteed},
                              {"p_intersection", factor_json(v.p_intersection, names)}};
    } else if (st.verb == "verify") {
      std::ifstream in(st.args[0]);
      if (!in) throw PreconditionError("cannot open filtration file '" + st.args[0] + "'");
      json j = json::parse(in);
      auto module_name = j.at("module").get<std::string>();
      B backend = [&] {
        if (module_name == "R") {
          if constexpr (std::is_same_v<B, MonomialBackend>)
            return MonomialBackend(static_cast<int>(names.size()), 1, names);
          else
            return ZBackend(1);
        }
        auto it = env.modules.find(module_name);
        if (it == env.modules.end())
          throw PreconditionError("unknown module '" + module_name + "' in filtration file");
        return it->second;
      }();
      Filtration<typename B::Sub> f;
      f.base = sub_from_json(backend, j.at("base"));
      for (const auto& step : j.at("steps"))
        f.steps.emplace_back(prime_from_json(step.at("prime"), names),
                             sub_from_json(backend, step.at("submodule")));
      auto v = verify_filtration(backend, f);
      text = v.ok ? "verify: ok" : "verify: FAIL (" + v.diagnostic + ")";
      record["result"] = json{{"ok", v.ok}, {"diagnostic", v.diagnostic}};
    }

    if (opts.json)
      out << record.dump() << "\n";
    else
      out << text << "\n";
    if (opts.oracle) oracle_check(st, env, opts, out);
  }
  return 0;
}

}  // namespace

int run_session(const Session& s, const RunOptions& opts, std::ostream& out) {
  try {
    if (!s.has_ring) return 0;  // empty session
    if (s.ring_is_z) {
      Env<ZBackend> env = build_z_env(s);
      return exec_commands(s, env, opts, out);
    }
    Env<MonomialBackend> env = build_mono_env(s);
    return exec_commands(s, env, opts, out);
  } catch (const TheoremViolation& e) {
    out << "theorem violation: " << e.what() << "\n";
    return 2;
  } catch (const InternalVerificationError& e) {
    out << "internal verification failure: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    out << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gpif
