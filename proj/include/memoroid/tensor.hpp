// Copyright 2026 The memoroid Authors. Apache 2.0 License.
#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace memo {

// A dense row-major float64 tensor. Vectors use shape {n}; matrices {r, c}.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  Tensor() = default;
  Tensor(std::vector<std::size_t> s) : shape(std::move(s)) {
    data.assign(element_count(shape), 0.0);
  }
  Tensor(std::vector<std::size_t> s, std::vector<double> d)
      : shape(std::move(s)), data(std::move(d)) {
    if (data.size() != element_count(shape)) {
      throw std::invalid_argument("Tensor: data size does not match shape");
    }
  }

  static std::size_t element_count(const std::vector<std::size_t>& s) {
    std::size_t n = 1;
    for (auto d : s) n *= d;
    return n;
  }

  std::size_t size() const { return data.size(); }
  std::size_t rows() const { return shape.empty() ? 0 : shape[0]; }
  std::size_t cols() const { return shape.size() > 1 ? shape[1] : 1; }

  double& at(std::size_t r, std::size_t c) { return data[r * cols() + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols() + c]; }
};

// An ordered name -> tensor map. Ordering is alphabetical and deterministic,
// which the optimizer and serializer both rely on.
class TensorStore {
 public:
  using Map = std::map<std::string, Tensor>;

  Tensor& emplace(const std::string& name, Tensor t) {
    auto [it, inserted] = tensors_.insert_or_assign(name, std::move(t));
    return it->second;
  }

  bool contains(const std::string& name) const { return tensors_.count(name) > 0; }

  Tensor& at(const std::string& name) {
    auto it = tensors_.find(name);
    if (it == tensors_.end()) throw std::out_of_range("TensorStore: missing tensor " + name);
    return it->second;
  }
  const Tensor& at(const std::string& name) const {
    auto it = tensors_.find(name);
    if (it == tensors_.end()) throw std::out_of_range("TensorStore: missing tensor " + name);
    return it->second;
  }

  Map::iterator begin() { return tensors_.begin(); }
  Map::iterator end() { return tensors_.end(); }
  Map::const_iterator begin() const { return tensors_.begin(); }
  Map::const_iterator end() const { return tensors_.end(); }
  std::size_t size() const { return tensors_.size(); }

 private:
  Map tensors_;
};

// Binary container format (little-endian):
//   magic "MTEN" | u32 version=1 | u64 json_len | json metadata bytes |
//   u64 tensor_count | per tensor:
//     u16 name_len | name bytes | u8 ndim | u64 dim[ndim] | f64 data[...]
// The JSON metadata is free-form; model checkpoints store kind and dims there.
void save_tensors(const std::string& path, const TensorStore& store,
                  const std::string& metadata_json);
TensorStore load_tensors(const std::string& path, std::string* metadata_json);

}  // namespace memo
