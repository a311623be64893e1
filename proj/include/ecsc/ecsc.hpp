/*
 * Copyright (C) 2026 The ecsc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Umbrella header for the elliptic-curve signcryption toolkit.

#include "ecsc/bigint.hpp"
#include "ecsc/bytes.hpp"
#include "ecsc/cipher.hpp"
#include "ecsc/costmodel.hpp"
#include "ecsc/curve.hpp"
#include "ecsc/errors.hpp"
#include "ecsc/field.hpp"
#include "ecsc/hash.hpp"
#include "ecsc/params.hpp"
#include "ecsc/pki.hpp"
#include "ecsc/rng.hpp"
#include "ecsc/schnorr.hpp"
#include "ecsc/signcryption.hpp"
#include "ecsc/wire.hpp"
