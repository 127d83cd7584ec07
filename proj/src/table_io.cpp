#include "dagforge/table_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace dagforge {

namespace {

constexpr const char* kMagic = "dagforge-tables";
constexpr const char* kVersion = "v1";

void write_entries(std::ostream& os, int n_max, auto&& a_of, auto&& b_of) {
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= n; ++k)
      os << n << " " << k << " " << a_of(n, k) << " " << b_of(n, k) << "\n";
}

std::map<std::string, std::string> parse_header(const std::string& line) {
  std::istringstream ss(line);
  std::string magic, version;
  ss >> magic >> version;
  if (magic != kMagic) throw TableIoError("table cache: bad magic");
  if (version != kVersion) throw TableIoError("table cache: unsupported version " + version);
  std::map<std::string, std::string> kv;
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw TableIoError("table cache: bad header token " + tok);
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

int header_int(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw TableIoError("table cache: missing header field " + key);
  return std::stoi(it->second);
}

// reads all <n> <k> <a> <b> lines into the store callback
template <typename Store>
void read_entries(std::istream& is, int n_max, Store&& store) {
  std::vector<std::vector<bool>> seen(n_max + 1);
  for (int n = 1; n <= n_max; ++n) seen[n].assign(n + 1, false);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    int n, k;
    std::string a_str, b_str;
    if (!(ss >> n >> k >> a_str >> b_str)) throw TableIoError("table cache: bad entry line");
    if (n < 1 || n > n_max || k < 1 || k > n)
      throw TableIoError("table cache: entry (n,k) out of range");
    if (seen[n][k]) throw TableIoError("table cache: duplicate entry");
    seen[n][k] = true;
    BigInt a, b;
    if (mpz_set_str(a.get_mpz_t(), a_str.c_str(), 10) != 0 || sgn(a) < 0)
      throw TableIoError("table cache: bad a value");
    if (mpz_set_str(b.get_mpz_t(), b_str.c_str(), 10) != 0 || sgn(b) < 0)
      throw TableIoError("table cache: bad b value");
    store(n, k, std::move(a), std::move(b));
  }
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= n; ++k)
      if (!seen[n][k]) throw TableIoError("table cache: missing entry");
}

void verify_count_table(const CountTable& t) {
  for (int n = 1; n <= t.n_max; ++n) {
    for (int k = 1; k <= n; ++k)
      if (t.a(n, k) != binomial(n, k) * t.b(n, k))
        throw TableIoError("table cache: divisibility check failed at (" + std::to_string(n) +
                           "," + std::to_string(k) + ")");
    if (t.a(n, n) != 1) throw TableIoError("table cache: a(n,n) != 1");
  }
  if (t.variant == TableVariant::unrestricted) {
    for (int n = 1; n <= t.n_max; ++n)
      if (total_inclusion_exclusion(n, t) != t.total(n))
        throw TableIoError("table cache: inclusion-exclusion total mismatch at n=" +
                           std::to_string(n));
  }
}

void verify_weighted_table(const WeightedTable& t) {
  for (int n = 1; n <= t.n_max; ++n) {
    for (int k = 1; k <= n; ++k)
      if (t.a_int(n, k) != binomial(n, k) * t.b_int(n, k))
        throw TableIoError("table cache: divisibility check failed at (" + std::to_string(n) +
                           "," + std::to_string(k) + ")");
    if (t.a_int(n, n) != ipow(t.q, max_arcs(n)))
      throw TableIoError("table cache: weighted base entry mismatch at n=" + std::to_string(n));
  }
}

}  // namespace

void save_table(std::ostream& os, const CountTable& t) {
  os << kMagic << " " << kVersion << " variant=" << variant_name(t.variant)
     << " n_max=" << t.n_max;
  if (t.variant == TableVariant::max_in || t.variant == TableVariant::max_in_out ||
      t.variant == TableVariant::max_children)
    os << " K=" << t.K;
  if (t.variant == TableVariant::max_in_out) os << " K_n=" << t.K_n;
  os << "\n";
  write_entries(os, t.n_max, [&](int n, int k) -> const BigInt& { return t.a(n, k); },
                [&](int n, int k) -> const BigInt& { return t.b(n, k); });
}

void save_table(std::ostream& os, const WeightedTable& t) {
  os << kMagic << " " << kVersion << " variant=weighted n_max=" << t.n_max << " p=" << t.num
     << "/" << t.den << "\n";
  write_entries(os, t.n_max, [&](int n, int k) -> const BigInt& { return t.a_int(n, k); },
                [&](int n, int k) -> const BigInt& { return t.b_int(n, k); });
}

LoadedTable load_table(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw TableIoError("table cache: empty file");
  auto kv = parse_header(line);
  int n_max = header_int(kv, "n_max");
  if (n_max < 1) throw TableIoError("table cache: n_max must be >= 1");
  auto variant_it = kv.find("variant");
  if (variant_it == kv.end()) throw TableIoError("table cache: missing variant");
  const std::string& variant = variant_it->second;

  LoadedTable out;
  if (variant == "weighted") {
    WeightedTable t;
    auto p_it = kv.find("p");
    if (p_it == kv.end()) throw TableIoError("table cache: weighted table needs p");
    BigRat p;
    if (mpq_set_str(p.get_mpq_t(), p_it->second.c_str(), 10) != 0)
      throw TableIoError("table cache: bad p");
    p.canonicalize();
    if (p < 0 || p > 1) throw TableIoError("table cache: p out of [0,1]");
    t.p = p;
    t.num = p.get_num();
    t.den = p.get_den();
    t.q = t.den - t.num;
    t.allocate(n_max);
    read_entries(is, n_max, [&](int n, int k, BigInt a, BigInt b) {
      t.a_mut(n, k) = std::move(a);
      t.b_mut(n, k) = std::move(b);
    });
    verify_weighted_table(t);
    t.recompute_totals();
    out.weighted = std::move(t);
    return out;
  }

  CountTable t;
  if (variant == "unrestricted")
    t.variant = TableVariant::unrestricted;
  else if (variant == "max_in")
    t.variant = TableVariant::max_in;
  else if (variant == "max_in_out")
    t.variant = TableVariant::max_in_out;
  else if (variant == "max_children")
    t.variant = TableVariant::max_children;
  else
    throw TableIoError("table cache: unknown variant " + variant);

  if (t.variant != TableVariant::unrestricted) {
    t.K = header_int(kv, "K");
    if (t.K < 1) throw TableIoError("table cache: K must be >= 1");
  }
  if (t.variant == TableVariant::max_in_out) {
    t.K_n = header_int(kv, "K_n");
    if (t.K_n < 0) throw TableIoError("table cache: K_n must be >= 0");
  }
  t.allocate(n_max);
  read_entries(is, n_max, [&](int n, int k, BigInt a, BigInt b) {
    t.a_mut(n, k) = std::move(a);
    t.b_mut(n, k) = std::move(b);
  });
  t.recompute_totals();
  verify_count_table(t);
  if (t.variant == TableVariant::max_children) populate_c_cache(t);
  out.count = std::move(t);
  return out;
}

void save_table_file(const std::string& path, const CountTable& t) {
  std::ofstream os(path);
  if (!os) throw TableIoError("cannot open " + path + " for writing");
  save_table(os, t);
  if (!os) throw TableIoError("write failed: " + path);
}

void save_table_file(const std::string& path, const WeightedTable& t) {
  std::ofstream os(path);
  if (!os) throw TableIoError("cannot open " + path + " for writing");
  save_table(os, t);
  if (!os) throw TableIoError("write failed: " + path);
}

LoadedTable load_table_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw TableIoError("cannot open table cache: " + path);
  return load_table(is);
}

}  // namespace dagforge
