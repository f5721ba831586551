#include "brauerkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace brauerkit {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument(what);
}

// Keys join colour names with spaces, so names must stay splittable.
void validate_colour_name(const std::string& name) {
  if (name.empty()) bad("palette: empty colour name");
  for (char ch : name)
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '|' || ch == '@')
      bad("palette: colour name '" + name + "' contains a reserved character");
}

std::string word_key(const Palette& pal, const ColourList& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += pal.name(w[i]);
  }
  return out;
}

ColourList word_from_key(const Palette& pal, const std::string& key) {
  ColourList w;
  std::istringstream in(key);
  std::string name;
  while (in >> name) {
    int c = pal.index(name);
    if (c < 0) bad("oracle: unknown colour '" + name + "' in word '" + key + "'");
    w.push_back(c);
  }
  return w;
}

std::vector<int> ints_from(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  int v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) bad("oracle: malformed index list '" + text + "'");
  return out;
}

}  // namespace

json rat_to_json(const Rat& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p())
    return json(static_cast<long>(x.get_num().get_si()));
  return json(to_string(x));
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return rat(j.get<long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  bad("expected an integer or a \"p/q\" string, got " + j.dump());
}

json mat_to_json(const Mat& a) {
  json data = json::array();
  for (int r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(rat_to_json(a.at(r, c)));
    data.push_back(std::move(row));
  }
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

Mat mat_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data"))
    bad("matrix: expected {rows, cols, data}");
  int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
  if (rows < 0 || cols < 0) bad("matrix: negative shape");
  const json& data = j.at("data");
  if (!data.is_array() || static_cast<int>(data.size()) != rows)
    bad("matrix: row count does not match shape");
  Mat a(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = data.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      bad("matrix: column count does not match shape");
    for (int c = 0; c < cols; ++c) a.at(r, c) = rat_from_json(row.at(c));
  }
  return a;
}

json palette_to_json(const Palette& pal) {
  json colours = json::array();
  json omega = json::object();
  for (int c = 0; c < pal.size(); ++c) {
    colours.push_back(pal.name(c));
    omega[pal.name(c)] = pal.name(pal.omega(c));
  }
  return json{{"colours", std::move(colours)}, {"omega", std::move(omega)}};
}

Palette palette_from_json(const json& j) {
  if (!j.is_object() || !j.contains("colours"))
    bad("palette: expected {colours, omega}");
  const json& cj = j.at("colours");
  if (!cj.is_array() || cj.empty()) bad("palette: colours must be a nonempty array");
  std::vector<std::string> names;
  for (const json& e : cj) {
    if (!e.is_string()) bad("palette: colour names must be strings");
    names.push_back(e.get<std::string>());
    validate_colour_name(names.back());
  }
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t k = i + 1; k < names.size(); ++k)
      if (names[i] == names[k]) bad("palette: duplicate colour '" + names[i] + "'");
  std::vector<int> omega(names.size());
  std::iota(omega.begin(), omega.end(), 0);
  if (j.contains("omega")) {
    const json& oj = j.at("omega");
    if (!oj.is_object()) bad("palette: omega must be an object");
    auto index = [&](const std::string& name) {
      for (size_t c = 0; c < names.size(); ++c)
        if (names[c] == name) return static_cast<int>(c);
      bad("palette: omega mentions unknown colour '" + name + "'");
    };
    for (auto it = oj.begin(); it != oj.end(); ++it) {
      if (!it.value().is_string()) bad("palette: omega values must be strings");
      omega[index(it.key())] = index(it.value().get<std::string>());
    }
  }
  for (size_t c = 0; c < names.size(); ++c)
    if (omega[omega[c]] != static_cast<int>(c))
      bad("palette: omega is not an involution at '" + names[c] + "'");
  return Palette(std::move(names), std::move(omega));
}

Palette load_palette(const std::string& path) {
  return palette_from_json(json::parse(read_text_file(path)));
}

json oracle_to_json(const CircuitAlgebraOracle& A, int bound) {
  const Palette& pal = A.palette;
  json dims = json::object(), prod = json::object(), contract = json::object();
  json eps = json::object(), act = json::object();
  std::vector<ColourList> words = all_words(pal, bound);
  for (const ColourList& w : words) dims[word_key(pal, w)] = A.dim(w);
  for (const ColourList& w1 : words)
    for (const ColourList& w2 : words) {
      if (static_cast<int>(w1.size() + w2.size()) > bound) continue;
      prod[word_key(pal, w1) + "|" + word_key(pal, w2)] =
          mat_to_json(A.prod(w1, w2));
    }
  for (const ColourList& w : words)
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t k = i + 1; k < w.size(); ++k) {
        if (w[k] != pal.omega(w[i])) continue;
        std::ostringstream key;
        key << word_key(pal, w) << " @ " << i << ' ' << k;
        contract[key.str()] = mat_to_json(
            A.contract(w, static_cast<int>(i), static_cast<int>(k)));
      }
  for (int c = 0; c < pal.size(); ++c) eps[pal.name(c)] = mat_to_json(A.eps(c));
  json out{{"palette", palette_to_json(pal)},
           {"bound", bound},
           {"dims", std::move(dims)},
           {"unit", mat_to_json(A.unit)},
           {"prod", std::move(prod)},
           {"contract", std::move(contract)},
           {"eps", std::move(eps)}};
  if (A.act) {
    for (const ColourList& w : words) {
      std::vector<int> images(w.size());
      std::iota(images.begin(), images.end(), 0);
      do {
        std::ostringstream key;
        key << word_key(pal, w) << " @";
        for (int v : images) key << ' ' << v;
        act[key.str()] = mat_to_json(A.act(w, Permutation(images)));
      } while (std::next_permutation(images.begin(), images.end()));
    }
    out["act"] = std::move(act);
  }
  return out;
}

namespace {

// Backing store for a loaded oracle; the closures share ownership.
struct OracleTable {
  Palette pal;
  std::map<ColourList, int> dims;
  std::map<std::pair<ColourList, ColourList>, Mat> prod;
  std::map<std::tuple<ColourList, int, int>, Mat> contract;
  std::map<int, Mat> eps;
  std::map<std::pair<ColourList, std::vector<int>>, Mat> act;
};

[[noreturn]] void missing(const OracleTable& t, const std::string& what,
                          const ColourList& w) {
  bad("oracle file has no " + what + " entry for word '" + word_key(t.pal, w) +
      "'");
}

}  // namespace

CircuitAlgebraOracle oracle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("palette") || !j.contains("dims") ||
      !j.contains("unit") || !j.contains("prod") || !j.contains("contract") ||
      !j.contains("eps"))
    bad("oracle: expected {palette, dims, unit, prod, contract, eps}");
  auto t = std::make_shared<OracleTable>();
  t->pal = palette_from_json(j.at("palette"));
  for (auto it = j.at("dims").begin(); it != j.at("dims").end(); ++it)
    t->dims[word_from_key(t->pal, it.key())] = it.value().get<int>();
  for (auto it = j.at("prod").begin(); it != j.at("prod").end(); ++it) {
    const std::string& key = it.key();
    size_t sep = key.find('|');
    if (sep == std::string::npos) bad("oracle: product key '" + key + "' lacks '|'");
    t->prod[{word_from_key(t->pal, key.substr(0, sep)),
             word_from_key(t->pal, key.substr(sep + 1))}] =
        mat_from_json(it.value());
  }
  for (auto it = j.at("contract").begin(); it != j.at("contract").end(); ++it) {
    const std::string& key = it.key();
    size_t sep = key.find('@');
    if (sep == std::string::npos)
      bad("oracle: contraction key '" + key + "' lacks '@'");
    std::vector<int> slots = ints_from(key.substr(sep + 1));
    if (slots.size() != 2) bad("oracle: contraction key '" + key + "' needs two slots");
    t->contract[{word_from_key(t->pal, key.substr(0, sep)), slots[0], slots[1]}] =
        mat_from_json(it.value());
  }
  for (auto it = j.at("eps").begin(); it != j.at("eps").end(); ++it) {
    int c = t->pal.index(it.key());
    if (c < 0) bad("oracle: eps names unknown colour '" + it.key() + "'");
    t->eps[c] = mat_from_json(it.value());
  }
  bool has_act = j.contains("act");
  if (has_act)
    for (auto it = j.at("act").begin(); it != j.at("act").end(); ++it) {
      const std::string& key = it.key();
      size_t sep = key.find('@');
      if (sep == std::string::npos)
        bad("oracle: relabelling key '" + key + "' lacks '@'");
      t->act[{word_from_key(t->pal, key.substr(0, sep)),
              ints_from(key.substr(sep + 1))}] = mat_from_json(it.value());
    }

  CircuitAlgebraOracle A;
  A.palette = t->pal;
  A.dim = [t](const ColourList& w) {
    auto it = t->dims.find(w);
    if (it == t->dims.end()) missing(*t, "dimension", w);
    return it->second;
  };
  A.prod = [t](const ColourList& w1, const ColourList& w2) {
    auto it = t->prod.find({w1, w2});
    if (it == t->prod.end()) missing(*t, "product", word_concat(w1, w2));
    return it->second;
  };
  A.unit = mat_from_json(j.at("unit"));
  A.contract = [t](const ColourList& w, int i, int k) {
    auto it = t->contract.find({w, i, k});
    if (it == t->contract.end()) missing(*t, "contraction", w);
    return it->second;
  };
  A.eps = [t](int c) {
    auto it = t->eps.find(c);
    if (it == t->eps.end())
      bad("oracle file has no eps entry for colour '" + t->pal.name(c) + "'");
    return it->second;
  };
  if (has_act)
    A.act = [t](const ColourList& w, const Permutation& p) {
      auto it = t->act.find({w, p.images()});
      if (it == t->act.end()) missing(*t, "relabelling", w);
      return it->second;
    };
  return A;
}

CircuitAlgebraOracle load_oracle(const std::string& path) {
  return oracle_from_json(json::parse(read_text_file(path)));
}

json report_json(const FftReport& r) {
  return json{{"m", r.m},
              {"n", r.n},
              {"basis_dim", r.basis_dim},
              {"rank", r.rank},
              {"oracle_dim", r.oracle_dim},
              {"kernel_dim", r.kernel_dim},
              {"expect_injective", r.expect_injective},
              {"ok", r.ok},
              {"note", r.note}};
}

json report_json(const SftReport& r) {
  return json{{"m", r.m},
              {"n", r.n},
              {"delta", rat_to_json(r.delta)},
              {"k", r.k},
              {"bound", r.bound},
              {"loop", rat_to_json(r.loop)},
              {"gen_vanishes", r.gen_vanishes},
              {"kernel_dim", r.kernel_dim},
              {"ideal_dim", r.ideal_dim},
              {"equal", r.equal},
              {"note", r.note}};
}

json report_json(const GlReport& r) {
  return json{{"d", r.d},
              {"n", r.n},
              {"factorial", r.factorial},
              {"rank", r.rank},
              {"kernel_dim", r.kernel_dim},
              {"kernel_matches", r.kernel_matches},
              {"oriented_agrees", r.oriented_agrees},
              {"ok", r.ok},
              {"note", r.note}};
}

json report_json(const CaKernelReport& r) {
  return json{{"n", r.n},
              {"max_bubbles", r.max_bubbles},
              {"delta", rat_to_json(r.delta)},
              {"k", r.k},
              {"ambient_dim", r.ambient_dim},
              {"kernel_dim", r.kernel_dim},
              {"ideal_dim", r.ideal_dim},
              {"equal", r.equal},
              {"note", r.note}};
}

json report_json(const CaReport& r) {
  return json{{"ok", r.ok}, {"checked", r.checked}, {"failure", r.failure}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed on " + path);
}

}  // namespace brauerkit
