#include "mcsh/snapshot.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mcsh {
namespace {

std::string hex(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

double parse_double(const std::string& token) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0')
    throw SnapshotFormatError("snapshot: bad number '" + token + "'");
  return v;
}

std::istringstream next_line(std::istream& in, const std::string& keyword) {
  std::string line;
  if (!std::getline(in, line)) throw SnapshotFormatError("snapshot: missing '" + keyword + "' line");
  std::istringstream ls(line);
  std::string word;
  ls >> word;
  if (word != keyword)
    throw SnapshotFormatError("snapshot: expected '" + keyword + "', found '" + word + "'");
  return ls;
}

std::string word(std::istringstream& ls) {
  std::string w;
  if (!(ls >> w)) throw SnapshotFormatError("snapshot: truncated line");
  return w;
}

}  // namespace

void write_snapshot(std::ostream& out, const Snapshot& snap) {
  const GridSpec& g = snap.state.grid();
  out << "mcsh-snapshot 1\n";
  out << "grid " << g.n << ' ' << hex(g.length) << ' ' << g.dealias_factor << '\n';
  out << "time " << hex(snap.state.t) << '\n';
  out << "params " << hex(snap.params.e) << ' ' << hex(snap.params.kappa) << ' '
      << hex(snap.params.v) << '\n';
  out << "seed " << snap.seed << '\n';
  for (std::size_t f = 0; f < kNumFields; ++f) {
    for (int which = 0; which < 2; ++which) {
      const SpectralField& field = which == 0 ? snap.state.u[f] : snap.state.du[f];
      out << "field " << field_name(f) << ' ' << (which == 0 ? "u" : "du") << ' '
          << (field.is_real() ? "real" : "complex") << '\n';
      for (const auto& c : field.coefficients()) out << hex(c.real()) << ' ' << hex(c.imag()) << '\n';
    }
  }
  out << "end\n";
}

Snapshot read_snapshot(std::istream& in) {
  Snapshot snap;
  {
    auto ls = next_line(in, "mcsh-snapshot");
    if (word(ls) != "1") throw SnapshotFormatError("snapshot: unsupported version");
  }
  GridSpec grid;
  {
    auto ls = next_line(in, "grid");
    grid.n = std::stoi(word(ls));
    grid.length = parse_double(word(ls));
    grid.dealias_factor = std::stoi(word(ls));
    grid.validate();
  }
  {
    auto ls = next_line(in, "time");
    snap.state.t = parse_double(word(ls));
  }
  {
    auto ls = next_line(in, "params");
    snap.params.e = parse_double(word(ls));
    snap.params.kappa = parse_double(word(ls));
    snap.params.v = parse_double(word(ls));
  }
  {
    auto ls = next_line(in, "seed");
    snap.seed = std::stoull(word(ls));
  }
  for (std::size_t f = 0; f < kNumFields; ++f) {
    for (int which = 0; which < 2; ++which) {
      auto ls = next_line(in, "field");
      const std::string name = word(ls);
      const std::string slot = word(ls);
      const std::string kind = word(ls);
      if (name != field_name(f) || slot != (which == 0 ? "u" : "du"))
        throw SnapshotFormatError("snapshot: unexpected field block " + name + " " + slot);
      std::vector<Complex> coeffs(grid.size());
      for (auto& c : coeffs) {
        std::string re, im;
        if (!(in >> re >> im)) throw SnapshotFormatError("snapshot: truncated coefficients");
        c = Complex(parse_double(re), parse_double(im));
      }
      in.ignore(1, '\n');
      auto field = SpectralField::from_coefficients(
          grid, std::move(coeffs), kind == "real" ? FieldKind::Real : FieldKind::Complex);
      (which == 0 ? snap.state.u[f] : snap.state.du[f]) = std::move(field);
    }
  }
  next_line(in, "end");
  snap.state.validate();
  return snap;
}

void save_snapshot(const std::string& path, const Snapshot& snap) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_snapshot(out, snap);
}

Snapshot load_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_snapshot(in);
}

}  // namespace mcsh
