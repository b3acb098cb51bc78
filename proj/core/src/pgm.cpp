// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "schwinger/qubism.hpp"

namespace schwinger {

namespace {

std::filesystem::path sidecar(const std::filesystem::path& p) { return std::filesystem::path(p.string() + ".json"); }

std::string next_token(std::istream& in) {
  std::string tok;
  char c;
  while (in.get(c)) {
    if (c == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(c);
  }
  return tok;
}

}  // namespace

void export_pgm(const QubismImage& img, const std::filesystem::path& path) {
  if (img.intensity.size() == 0) throw std::invalid_argument("empty image");
  const double peak = img.intensity.maxCoeff();
  if (!(peak > 0)) throw std::invalid_argument("empty image");
  const Eigen::Index h = img.intensity.rows();
  const Eigen::Index w = img.intensity.cols();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "P5\n" << w << ' ' << h << "\n65535\n";
  std::vector<unsigned char> buf(static_cast<std::size_t>(2 * w * h));
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < h; ++r) {
    for (Eigen::Index c = 0; c < w; ++c) {
      const auto v = static_cast<std::uint16_t>(std::lround(65535.0 * img.intensity(r, c) / peak));
      buf[k++] = static_cast<unsigned char>(v >> 8);
      buf[k++] = static_cast<unsigned char>(v & 0xff);
    }
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());

  nlohmann::json meta = {{"n_sites", img.n_sites},      {"x", img.x},
                         {"mu", img.mu},                {"max_intensity", peak},
                         {"exponent", kQubismExponent}, {"width", w},
                         {"height", h}};
  std::ofstream js(sidecar(path));
  if (!js) throw std::runtime_error("cannot write sidecar for " + path.string());
  js << meta.dump(2) << '\n';
}

QubismImage import_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  if (next_token(in) != "P5") throw std::runtime_error(path.string() + ": not a binary PGM (P5) file");
  long w = 0, h = 0, maxval = 0;
  try {
    w = std::stol(next_token(in));
    h = std::stol(next_token(in));
    maxval = std::stol(next_token(in));
  } catch (const std::exception&) {
    throw std::runtime_error(path.string() + ": malformed PGM header");
  }
  if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 65535) throw std::runtime_error(path.string() + ": malformed PGM header");
  const int bytes = maxval > 255 ? 2 : 1;
  std::vector<unsigned char> buf(static_cast<std::size_t>(bytes * w * h));
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (in.gcount() != static_cast<std::streamsize>(buf.size())) throw std::runtime_error(path.string() + ": truncated pixel data");

  std::ifstream js(sidecar(path));
  if (!js) throw std::runtime_error("missing sidecar " + sidecar(path).string());
  nlohmann::json meta;
  try {
    js >> meta;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed sidecar: " + std::string(e.what()));
  }
  QubismImage img;
  img.n_sites = meta.at("n_sites").get<int>();
  img.x = meta.value("x", 0.0);
  img.mu = meta.value("mu", 0.0);
  const double peak = meta.at("max_intensity").get<double>();
  img.intensity.resize(h, w);
  std::size_t k = 0;
  for (long r = 0; r < h; ++r) {
    for (long c = 0; c < w; ++c) {
      unsigned v = buf[k++];
      if (bytes == 2) v = (v << 8) | buf[k++];
      img.intensity(r, c) = peak * static_cast<double>(v) / static_cast<double>(maxval);
    }
  }
  return img;
}

}  // namespace schwinger
