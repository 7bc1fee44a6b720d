#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace indeque {

using Vertex = int;

// Base of every domain error thrown by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph construction (out-of-range id, self-loop, bad parameter).
class GraphError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A valid encoding of a graph kind that we deliberately do not read
// (sparse6, digraph6).
class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

// Exhaustive routine asked to run above its configured vertex limit.
class LimitExceeded : public Error {
 public:
  LimitExceeded(int n, int limit)
      : Error("graph has " + std::to_string(n) + " vertices, oracle limit is " +
              std::to_string(limit)),
        n_(n),
        limit_(limit) {}
  int order() const { return n_; }
  int limit() const { return limit_; }

 private:
  int n_;
  int limit_;
};

class CyclicInput : public Error {
 public:
  explicit CyclicInput(std::vector<Vertex> cycle)
      : Error("input contains a cycle"), cycle_(std::move(cycle)) {}
  const std::vector<Vertex>& cycle() const { return cycle_; }

 private:
  std::vector<Vertex> cycle_;
};

}  // namespace indeque
