#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quotecorpus {

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dump-side failures (CLI exit code 3).
class DumpError : public Error {
  using Error::Error;
};

class FileNotFound : public DumpError {
  using DumpError::DumpError;
};

class NotADump : public DumpError {
  using DumpError::DumpError;
};

class MalformedXml : public DumpError {
 public:
  MalformedXml(const std::string& what, std::size_t byte_offset)
      : DumpError(what + " (byte offset " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Store-side failures (CLI exit code 4).
class StoreError : public Error {
  using Error::Error;
};

class SchemaMismatch : public StoreError {
  using StoreError::StoreError;
};

class IoFailure : public StoreError {
  using StoreError::StoreError;
};

class UnknownProfile : public Error {
  using Error::Error;
};

class InvalidRange : public Error {
  using Error::Error;
};

}  // namespace quotecorpus
