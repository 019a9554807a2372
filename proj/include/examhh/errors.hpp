#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace examhh {

// Malformed instance, manifest, or solution text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened for reading or writing.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Initial construction ran out of timeslots before every exam was placed.
class SlotsExhausted : public std::runtime_error {
 public:
  SlotsExhausted(std::size_t unplaced, std::size_t timeslots)
      : std::runtime_error("construction exhausted " + std::to_string(timeslots) +
                           " timeslots with " + std::to_string(unplaced) +
                           " exam(s) unplaced"),
        unplaced_(unplaced) {}

  std::size_t unplaced() const noexcept { return unplaced_; }

 private:
  std::size_t unplaced_;
};

}  // namespace examhh
