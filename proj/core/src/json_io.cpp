#include "effectus/json_io.hpp"

#include <sstream>

#include "effectus/api.hpp"
#include "json_detail.hpp"

namespace effectus::detail {

json jPartialFn(const PartialFn& f) {
  json table = json::array();
  for (const auto& v : f.table) {
    if (v)
      table.push_back(*v);
    else
      table.push_back(nullptr);
  }
  return json{{"dom", f.dom}, {"cod", f.cod}, {"table", table}};
}

PartialFn pPartialFn(const json& j) {
  PartialFn f{j.at("dom").get<int>(), j.at("cod").get<int>(), {}};
  for (const auto& v : j.at("table")) {
    if (v.is_null())
      f.table.push_back(std::nullopt);
    else {
      int idx = v.get<int>();
      if (idx < 0 || idx >= f.cod) throw ParseError("partial function index out of range");
      f.table.push_back(idx);
    }
  }
  if (static_cast<int>(f.table.size()) != f.dom) throw ParseError("partial function table size");
  return f;
}

json jSubset(const SubsetPred& p) {
  json bits = json::array();
  for (int i = 0; i < p.size; ++i) bits.push_back(p.bits[i] != 0);
  return bits;
}

SubsetPred pSubset(const json& j) {
  SubsetPred p;
  for (const auto& v : j) p.bits.push_back(v.get<bool>() ? 1 : 0);
  p.size = static_cast<int>(p.bits.size());
  return p;
}

json jFuzzy(const FuzzyPred& p) {
  json a = json::array();
  for (const auto& r : p.v) a.push_back(r.str());
  return a;
}

FuzzyPred pFuzzy(const json& j) {
  FuzzyPred p;
  for (const auto& v : j) p.v.push_back(Rational01::parse(v.get<std::string>()));
  return p;
}

json jSubDist(const SubDist& d) {
  json o = json::object();
  for (const auto& [i, r] : d.w) o[std::to_string(i)] = r.str();
  return o;
}

SubDist pSubDist(const json& j) {
  SubDist d;
  RatAcc mass;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int idx = std::stoi(it.key());
    Rational01 r = Rational01::parse(it.value().get<std::string>());
    mass.add(r);
    d.set(idx, r);
  }
  if (!mass.leqOne()) throw ParseError("subdistribution mass exceeds 1");
  return d;
}

json jKernel(const KernelMap& f) {
  json rows = json::array();
  for (const auto& row : f.rows) rows.push_back(jSubDist(row));
  return json{{"dom", f.dom}, {"cod", f.cod}, {"rows", rows}};
}

KernelMap pKernel(const json& j) {
  KernelMap f{j.at("dom").get<int>(), j.at("cod").get<int>(), {}};
  for (const auto& row : j.at("rows")) {
    SubDist d = pSubDist(row);
    if (!d.w.empty() && d.w.rbegin()->first >= f.cod)
      throw ParseError("kernel row index out of range");
    f.rows.push_back(std::move(d));
  }
  if (static_cast<int>(f.rows.size()) != f.dom) throw ParseError("kernel row count");
  return f;
}

json jMatrix(const CMatrix& m) {
  json re = json::array(), im = json::array();
  for (const auto& v : m.data()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

CMatrix pMatrix(const json& j) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (rows < 0 || cols < 0 || static_cast<int>(re.size()) != rows * cols ||
      static_cast<int>(im.size()) != rows * cols)
    throw ParseError("matrix entry count");
  CMatrix m(rows, cols);
  for (int i = 0; i < rows * cols; ++i)
    m.data()[i] = cplx(re[i].get<double>(), im[i].get<double>());
  return m;
}

namespace {

VnAlg pAlg(const json& j) {
  VnAlg a;
  for (const auto& v : j) {
    int d = v.get<int>();
    if (d <= 0) throw ParseError("block dimensions must be positive");
    a.blockDims.push_back(d);
  }
  return a;
}

}  // namespace

json jBlockEffect(const BlockEffect& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks) blocks.push_back(jMatrix(b));
  return json{{"blockDims", p.alg.blockDims}, {"blocks", blocks}};
}

BlockEffect pBlockEffect(const json& j) {
  BlockEffect p{pAlg(j.at("blockDims")), {}};
  for (const auto& b : j.at("blocks")) p.blocks.push_back(pMatrix(b));
  QuantumEff::validateEffect(p);
  return p;
}

json jKraus(const KrausMap& f) {
  json terms = json::array();
  for (const auto& t : f.terms)
    terms.push_back(json{{"src", t.src}, {"dst", t.dst}, {"k", jMatrix(t.k)}});
  return json{{"domDims", f.dom.blockDims}, {"codDims", f.cod.blockDims}, {"terms", terms}};
}

KrausMap pKraus(const json& j) {
  KrausMap f{pAlg(j.at("domDims")), pAlg(j.at("codDims")), {}};
  for (const auto& t : j.at("terms")) {
    KrausTerm term{t.at("src").get<int>(), t.at("dst").get<int>(), pMatrix(t.at("k"))};
    if (term.src < 0 || term.src >= f.dom.numBlocks() || term.dst < 0 ||
        term.dst >= f.cod.numBlocks())
      throw ParseError("kraus term block index out of range");
    if (term.k.rows() != f.cod.dim(term.dst) || term.k.cols() != f.dom.dim(term.src))
      throw ParseError("kraus term dimensions");
    f.terms.push_back(std::move(term));
  }
  return f;
}

json jBlockState(const BlockState& s) {
  json ds = json::array();
  for (const auto& d : s.densities) ds.push_back(jMatrix(d));
  return json{{"blockDims", s.alg.blockDims}, {"densities", ds}};
}

BlockState pBlockState(const json& j) {
  BlockState s{pAlg(j.at("blockDims")), {}};
  for (const auto& d : j.at("densities")) s.densities.push_back(pMatrix(d));
  if (static_cast<int>(s.densities.size()) != s.alg.numBlocks())
    throw ParseError("block state density count");
  return s;
}

}  // namespace effectus::detail

namespace effectus::io {

using detail::json;

namespace {

json parseOrThrow(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

}  // namespace

std::string toJson(const PartialFn& f) { return detail::jPartialFn(f).dump(); }
PartialFn partialFnFromJson(const std::string& t) { return detail::pPartialFn(parseOrThrow(t)); }

std::string toJson(const SubsetPred& p) { return detail::jSubset(p).dump(); }

std::string toJson(const KernelMap& f) { return detail::jKernel(f).dump(); }
KernelMap kernelFromJson(const std::string& t) { return detail::pKernel(parseOrThrow(t)); }

std::string toJson(const FuzzyPred& p) { return detail::jFuzzy(p).dump(); }
FuzzyPred fuzzyFromJson(const std::string& t) { return detail::pFuzzy(parseOrThrow(t)); }

std::string toJson(const CMatrix& m) { return detail::jMatrix(m).dump(); }
CMatrix matrixFromJson(const std::string& t) { return detail::pMatrix(parseOrThrow(t)); }

std::string toJson(const BlockEffect& p) { return detail::jBlockEffect(p).dump(); }
BlockEffect blockEffectFromJson(const std::string& t) {
  return detail::pBlockEffect(parseOrThrow(t));
}

std::string toJson(const KrausMap& f) { return detail::jKraus(f).dump(); }
KrausMap krausFromJson(const std::string& t) { return detail::pKraus(parseOrThrow(t)); }

std::string toJson(const BlockState& s) { return detail::jBlockState(s).dump(); }
BlockState blockStateFromJson(const std::string& t) { return detail::pBlockState(parseOrThrow(t)); }

namespace {

json reportJ(const LawReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back(json::parse(f));
  return json{{"suite", r.suite},     {"anchor", r.anchor},   {"instance", r.instance},
              {"seed", r.seed},       {"trials", r.trials},   {"mode", r.mode},
              {"status", statusName(r.status)}, {"failures", failures}, {"elapsed_ms", r.elapsedMs}};
}

}  // namespace

std::string toJson(const LawReport& r) { return reportJ(r).dump(2); }

std::string reportsToJson(const std::vector<LawReport>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(reportJ(r));
  return a.dump(2);
}

namespace {

std::string rationalOut(const Rational01& r) { return r.str(); }

std::string doubleOut(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string evalBoolean(const json& j, const std::string& op) {
  FinSet x{j.at("carrier").get<int>(), {}};
  auto getPred = [&](const char* key) { return detail::pSubset(j.at(key)); };
  if (op == "validity") {
    int elem = j.at("state").get<int>();
    return getPred("pred").contains(elem) ? "true" : "false";
  }
  if (op == "assert") return toJson(BooleanEff::assertMap(x, getPred("pred")));
  if (op == "kersupp") return toJson(BooleanEff::kerSupp(detail::pPartialFn(j.at("map"))));
  if (op == "image")
    return detail::jSubset(BooleanEff::image(detail::pPartialFn(j.at("map")))).dump();
  if (op == "sharp") return "true";
  throw ParseError("operation '" + op + "' is not available for the boolean instance");
}

std::string evalProb(const json& j, const std::string& op) {
  auto statePred = [&]() {
    SubDist d = detail::pSubDist(j.at("state"));
    int n = j.at("carrier").get<int>();
    KernelMap omega{1, n, {d}};
    return std::make_pair(omega, detail::pFuzzy(j.at("pred")));
  };
  if (op == "validity") {
    auto [omega, pred] = statePred();
    return rationalOut(api::validity<ProbEff>(omega, pred));
  }
  if (op == "condition") {
    auto [omega, pred] = statePred();
    auto c = api::condition<ProbEff>(omega, pred);
    if (!c) return "undefined (validity is 0)";
    return detail::jSubDist(c->rows[0]).dump();
  }
  if (op == "assert") {
    int n = j.at("carrier").get<int>();
    return toJson(ProbEff::assertMap(FinSet{n, {}}, detail::pFuzzy(j.at("pred"))));
  }
  if (op == "andthen") {
    int n = j.at("carrier").get<int>();
    FuzzyPred p = detail::pFuzzy(j.at("pred"));
    FuzzyPred q = detail::pFuzzy(j.at("pred2"));
    return toJson(api::andThen<ProbEff>(FinSet{n, {}}, p, q));
  }
  if (op == "kersupp") return toJson(ProbEff::kerSupp(detail::pKernel(j.at("map"))));
  if (op == "image") return toJson(ProbEff::image(detail::pKernel(j.at("map"))));
  if (op == "normalize") {
    SubDist d = detail::pSubDist(j.at("state"));
    KernelMap omega{1, j.at("carrier").get<int>(), {d}};
    auto n = ProbEff::normalizeSub(omega);
    if (!n) return "undefined (zero substate)";
    return detail::jSubDist(n->first.rows[0]).dump() + " with weight " + n->second.str();
  }
  if (op == "floor" || op == "ceil") {
    int n = j.at("carrier").get<int>();
    FuzzyPred p = detail::pFuzzy(j.at("pred"));
    FinSet x{n, {}};
    return toJson(op == "floor" ? api::floorOf<ProbEff>(x, p) : api::ceilOf<ProbEff>(x, p));
  }
  if (op == "sharp") return ProbEff::isSharp(detail::pFuzzy(j.at("pred"))) ? "true" : "false";
  throw ParseError("operation '" + op + "' is not available for the prob instance");
}

std::string evalQuantum(const json& j, const std::string& op) {
  std::string note = " (tolerances: scalar=" + doubleOut(tolerances().scalar) +
                     ", spec=" + doubleOut(tolerances().spec) + ")";
  auto stateOf = [&]() { return QuantumEff::stateFromDensity(detail::pBlockState(j.at("state"))); };
  if (op == "validity") {
    double v = api::validity<QuantumEff>(stateOf(), detail::pBlockEffect(j.at("pred")));
    return doubleOut(v) + note;
  }
  if (op == "condition") {
    auto c = api::condition<QuantumEff>(stateOf(), detail::pBlockEffect(j.at("pred")));
    if (!c) return "undefined (validity is 0)";
    return detail::jBlockState(QuantumEff::densityOf(*c)).dump() + note;
  }
  if (op == "assert") {
    BlockEffect p = detail::pBlockEffect(j.at("pred"));
    return toJson(QuantumEff::assertMap(p.alg, p));
  }
  if (op == "andthen") {
    BlockEffect p = detail::pBlockEffect(j.at("pred"));
    BlockEffect q = detail::pBlockEffect(j.at("pred2"));
    return detail::jBlockEffect(api::andThen<QuantumEff>(p.alg, p, q)).dump() + note;
  }
  if (op == "kersupp") return toJson(QuantumEff::kerSupp(detail::pKraus(j.at("map"))));
  if (op == "image") return toJson(QuantumEff::image(detail::pKraus(j.at("map"))));
  if (op == "normalize") {
    auto n = QuantumEff::normalizeSub(QuantumEff::stateFromDensity(detail::pBlockState(j.at("state"))));
    if (!n) return "undefined (zero substate)";
    return detail::jBlockState(QuantumEff::densityOf(n->first)).dump() + " with weight " +
           doubleOut(n->second) + note;
  }
  if (op == "floor" || op == "ceil") {
    BlockEffect p = detail::pBlockEffect(j.at("pred"));
    return detail::jBlockEffect(op == "floor" ? api::floorOf<QuantumEff>(p.alg, p)
                                              : api::ceilOf<QuantumEff>(p.alg, p))
               .dump() +
           note;
  }
  if (op == "sharp")
    return QuantumEff::isSharp(detail::pBlockEffect(j.at("pred"))) ? "true" : "false";
  throw ParseError("operation '" + op + "' is not available for the quantum instance");
}

}  // namespace

std::string evalCase(const std::string& text) {
  json j = parseOrThrow(text);
  if (!j.is_object()) throw ParseError("eval case must be a JSON object");
  std::string op, instance;
  try {
    op = j.at("op").get<std::string>();
    instance = j.at("instance").get<std::string>();
    if (instance == "boolean") return evalBoolean(j, op);
    if (instance == "prob") return evalProb(j, op);
    if (instance == "quantum") return evalQuantum(j, op);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad eval case: ") + e.what());
  }
  throw ParseError("unknown instance '" + instance + "'");
}

}  // namespace effectus::io
