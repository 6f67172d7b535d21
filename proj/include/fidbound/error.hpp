// Copyright 2026 The fidbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fidbound {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid family hyper-parameter (mu <= 0, M < 1).
class HyperParamError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two parameters belong to different families or disagree on a shared
/// hyper-parameter.
class FamilyMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The Fock expansion does not reach the tail-mass target below the cutoff cap.
class CutoffExceeded : public Error {
 public:
  using Error::Error;
};

/// The partner state required by a fixed energy gap leaves the family domain.
class PartnerOutOfDomain : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The oracle grid contains no feasible first-state parameter.
class NoFeasiblePoint : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace fidbound
