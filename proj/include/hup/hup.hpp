#pragma once

#include "hup/classifier.hpp"
#include "hup/config.hpp"
#include "hup/curves.hpp"
#include "hup/errors.hpp"
#include "hup/linsys.hpp"
#include "hup/measures.hpp"
#include "hup/quadrature.hpp"
#include "hup/sympoly.hpp"
