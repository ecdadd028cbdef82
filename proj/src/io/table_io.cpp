#include "overrank/io/table_io.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "overrank/error.hpp"

namespace overrank::io {

namespace {

constexpr std::array<char, 8> kMagic{'O', 'V', 'R', 'K', 'T', 'B', 'L', '1'};

template <typename T>
void put_le(std::ostream& os, T v) {
  std::array<char, sizeof(T)> buf{};
  auto u = static_cast<std::make_unsigned_t<T>>(v);
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<char>(u & 0xff);
    u >>= 8;
  }
  os.write(buf.data(), buf.size());
}

template <typename T>
T get_le(std::istream& is) {
  std::array<unsigned char, sizeof(T)> buf{};
  if (!is.read(reinterpret_cast<char*>(buf.data()), buf.size())) throw FormatError("truncated table file");
  std::make_unsigned_t<T> u = 0;
  for (std::size_t i = sizeof(T); i-- > 0;) u = (u << 8) | buf[i];
  return static_cast<T>(u);
}

void put_mpz(std::ostream& os, const mpz_class& v) {
  const int s = sgn(v);
  std::size_t len = 0;
  std::vector<unsigned char> bytes((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8 + 1);
  if (s != 0) mpz_export(bytes.data(), &len, 1, 1, 1, 0, v.get_mpz_t());
  os.put(static_cast<char>(s < 0 ? 1 : 0));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(len));
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(len));
}

mpz_class get_mpz(std::istream& is) {
  const int neg = is.get();
  if (neg != 0 && neg != 1) throw FormatError("bad sign byte in table file");
  const auto len = get_le<std::uint32_t>(is);
  std::vector<unsigned char> bytes(len);
  if (len && !is.read(reinterpret_cast<char*>(bytes.data()), len)) throw FormatError("truncated table file");
  mpz_class v;
  if (len) mpz_import(v.get_mpz_t(), len, 1, 1, 1, 0, bytes.data());
  if (neg) v = -v;
  return v;
}

std::int64_t parse_i64(const std::string& s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw FormatError("bad integer field: " + s);
  }
  if (pos != s.size()) throw FormatError("bad integer field: " + s);
  return v;
}

std::filesystem::path file_for(const std::filesystem::path& dir, std::int64_t n) {
  return dir / ("ranks_" + std::to_string(n) + ".bin");
}

}  // namespace

void write_binary(std::ostream& os, const qseries::RankTable& t) {
  os.write(kMagic.data(), kMagic.size());
  put_le<std::int64_t>(os, t.n_max());
  for (std::int64_t n = 0; n <= t.n_max(); ++n) {
    for (const mpz_class& v : t.row(n)) put_mpz(os, v);
  }
}

qseries::RankTable read_binary(std::istream& is) {
  std::array<char, 8> magic{};
  if (!is.read(magic.data(), magic.size()) || magic != kMagic) throw FormatError("not a rank table file");
  const auto n_max = get_le<std::int64_t>(is);
  if (n_max < 0 || n_max > 1'000'000) throw FormatError("implausible n_max in table file");
  std::vector<std::vector<mpz_class>> rows(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    rows[n].reserve(static_cast<std::size_t>(n) + 1);
    for (std::int64_t m = 0; m <= n; ++m) rows[n].push_back(get_mpz(is));
  }
  try {
    return qseries::RankTable(n_max, std::move(rows));
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
}

void write_csv(std::ostream& os, const qseries::RankTable& t) {
  os << "n,m,count\n";
  for (std::int64_t n = 0; n <= t.n_max(); ++n) {
    const auto row = t.row(n);
    for (std::size_t m = 0; m < row.size(); ++m) os << n << ',' << m << ',' << row[m].get_str() << '\n';
  }
}

qseries::RankTable read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "n,m,count") throw FormatError("csv: expected header n,m,count");
  std::vector<std::vector<mpz_class>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string fn, fm, fc;
    if (!std::getline(ss, fn, ',') || !std::getline(ss, fm, ',') || !std::getline(ss, fc)) {
      throw FormatError("csv: malformed line: " + line);
    }
    const std::int64_t n = parse_i64(fn);
    const std::int64_t m = parse_i64(fm);
    if (n < 0 || m < 0 || m > n) throw FormatError("csv: index out of range: " + line);
    if (static_cast<std::size_t>(n) == rows.size()) rows.emplace_back();
    if (static_cast<std::size_t>(n) + 1 != rows.size() || static_cast<std::size_t>(m) != rows[n].size()) {
      throw FormatError("csv: rows out of order at: " + line);
    }
    mpz_class v;
    if (fc.empty() || v.set_str(fc, 10) != 0) throw FormatError("csv: bad count: " + line);
    rows[n].push_back(std::move(v));
  }
  if (rows.empty()) throw FormatError("csv: no rows");
  const auto n_max = static_cast<std::int64_t>(rows.size()) - 1;
  try {
    return qseries::RankTable(n_max, std::move(rows));
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
}

void write_json(std::ostream& os, const qseries::RankTable& t) {
  // streamed by hand: a full nlohmann tree of a 2500-row table is several hundred MB
  os << "{\"format_version\":" << kJsonFormatVersion << ",\"n_max\":" << t.n_max() << ",\"rows\":[";
  for (std::int64_t n = 0; n <= t.n_max(); ++n) {
    os << (n ? ",[" : "[");
    const auto row = t.row(n);
    for (std::size_t m = 0; m < row.size(); ++m) os << (m ? ",[" : "[") << m << ",\"" << row[m].get_str() << "\"]";
    os << ']';
  }
  os << "]}\n";
}

qseries::RankTable read_json(std::istream& is) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("json: ") + e.what());
  }
  try {
    if (j.at("format_version").get<int>() != kJsonFormatVersion) throw FormatError("json: unsupported format_version");
    const auto n_max = j.at("n_max").get<std::int64_t>();
    const auto& jrows = j.at("rows");
    if (n_max < 0 || !jrows.is_array() || static_cast<std::int64_t>(jrows.size()) != n_max + 1) {
      throw FormatError("json: rows do not match n_max");
    }
    std::vector<std::vector<mpz_class>> rows(jrows.size());
    for (std::size_t n = 0; n < jrows.size(); ++n) {
      for (const auto& pair : jrows[n]) {
        const auto m = pair.at(0).get<std::size_t>();
        if (m != rows[n].size()) throw FormatError("json: entries out of order in row " + std::to_string(n));
        mpz_class v;
        if (v.set_str(pair.at(1).get<std::string>(), 10) != 0) throw FormatError("json: bad count");
        rows[n].push_back(std::move(v));
      }
    }
    return qseries::RankTable(n_max, std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("json: ") + e.what());
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::resolve(const std::optional<std::filesystem::path>& explicit_dir) {
  if (explicit_dir) return *explicit_dir;
  if (const char* env = std::getenv("OVERRANK_CACHE"); env != nullptr && *env != '\0') return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return std::filesystem::path(xdg) / "overrank";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "overrank";
  }
  return ".overrank-cache";
}

std::optional<qseries::RankTable> TableCache::load(std::int64_t n_max) const {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir_, ec)) return std::nullopt;
  std::optional<std::int64_t> best;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("ranks_", 0) != 0 || entry.path().extension() != ".bin") continue;
    const std::string digits = name.substr(6, name.size() - 10);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) continue;
    const std::int64_t n = std::stoll(digits);
    if (n >= n_max && (!best || n < *best)) best = n;
  }
  if (!best) return std::nullopt;
  std::ifstream in(file_for(dir_, *best), std::ios::binary);
  if (!in) return std::nullopt;
  qseries::RankTable t = read_binary(in);
  if (t.n_max() != *best) throw FormatError("cache file name does not match its n_max");
  t.validate();
  if (t.n_max() == n_max) return t;
  return t.truncated(n_max);
}

void TableCache::store(const qseries::RankTable& t) const {
  std::filesystem::create_directories(dir_);
  const auto target = file_for(dir_, t.n_max());
  if (std::filesystem::exists(target)) return;
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    write_binary(out, t);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

qseries::RankTable TableCache::get_or_build(std::int64_t n_max, const qseries::TableOptions& options) const {
  if (auto t = load(n_max)) return std::move(*t);
  qseries::RankTable t = qseries::rank_table(n_max, options);
  t.validate();
  store(t);
  return t;
}

}  // namespace overrank::io
