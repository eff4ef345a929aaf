// Copyright 2026 The memoroid Authors. Apache 2.0 License.
#include "memoroid/tensor.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace memo {
namespace {

constexpr char kMagic[4] = {'M', 'T', 'E', 'N'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void write_raw(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T read_raw(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("tensor file: truncated read");
  return v;
}

}  // namespace

void save_tensors(const std::string& path, const TensorStore& store,
                  const std::string& metadata_json) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("tensor file: cannot open for write: " + path);
  os.write(kMagic, 4);
  write_raw(os, kVersion);
  write_raw(os, static_cast<std::uint64_t>(metadata_json.size()));
  os.write(metadata_json.data(), static_cast<std::streamsize>(metadata_json.size()));
  write_raw(os, static_cast<std::uint64_t>(store.size()));
  for (const auto& [name, tensor] : store) {
    if (name.size() > 0xffff) throw std::runtime_error("tensor file: name too long");
    write_raw(os, static_cast<std::uint16_t>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
    write_raw(os, static_cast<std::uint8_t>(tensor.shape.size()));
    for (auto d : tensor.shape) write_raw(os, static_cast<std::uint64_t>(d));
    os.write(reinterpret_cast<const char*>(tensor.data.data()),
             static_cast<std::streamsize>(tensor.data.size() * sizeof(double)));
  }
  if (!os) throw std::runtime_error("tensor file: write failed: " + path);
}

TensorStore load_tensors(const std::string& path, std::string* metadata_json) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("tensor file: cannot open for read: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0) {
    throw std::runtime_error("tensor file: bad magic: " + path);
  }
  const auto version = read_raw<std::uint32_t>(is);
  if (version != kVersion) throw std::runtime_error("tensor file: unsupported version");
  const auto json_len = read_raw<std::uint64_t>(is);
  std::string meta(json_len, '\0');
  is.read(meta.data(), static_cast<std::streamsize>(json_len));
  if (!is) throw std::runtime_error("tensor file: truncated metadata");
  if (metadata_json) *metadata_json = std::move(meta);

  TensorStore store;
  const auto count = read_raw<std::uint64_t>(is);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto name_len = read_raw<std::uint16_t>(is);
    std::string name(name_len, '\0');
    is.read(name.data(), name_len);
    const auto ndim = read_raw<std::uint8_t>(is);
    std::vector<std::size_t> shape(ndim);
    for (auto& d : shape) d = static_cast<std::size_t>(read_raw<std::uint64_t>(is));
    Tensor t(shape);
    is.read(reinterpret_cast<char*>(t.data.data()),
            static_cast<std::streamsize>(t.data.size() * sizeof(double)));
    if (!is) throw std::runtime_error("tensor file: truncated tensor data");
    store.emplace(name, std::move(t));
  }
  return store;
}

}  // namespace memo
