/**
 * The four plot kinds over the solver's CSV artifacts.  Pure presentation:
 * numbers (including fitted slopes) are taken from the CSVs, never
 * recomputed here.
 */

import { SCHEMAS, Table, parseTable } from './csv.js'
import { HEIGHT, MARGIN, PALETTE, Scene, WIDTH, axes, fmt, linearScale, log10Scale } from './svg.js'

export type PlotKind = 'eta' | 'convergence' | 'domain' | 'contour'

export interface PlotJob {
  kind: PlotKind
  data: string
  fits?: string
}

const PLOT_LEFT = MARGIN.left
const PLOT_RIGHT = WIDTH - MARGIN.right
const PLOT_TOP = MARGIN.top
const PLOT_BOTTOM = HEIGHT - MARGIN.bottom

export function render(job: PlotJob): string {
  switch (job.kind) {
    case 'eta':
      return renderEta(parseTable(job.data, SCHEMAS.eta))
    case 'convergence': {
      if (job.fits === undefined) throw new Error('convergence plots need the fits CSV')
      return renderConvergence(parseTable(job.data, SCHEMAS.convergence),
        parseTable(job.fits, SCHEMAS.convergenceFits))
    }
    case 'domain': {
      const fit = job.fits === undefined ? undefined : parseTable(job.fits, SCHEMAS.domainFit)
      return renderDomain(parseTable(job.data, SCHEMAS.domain), fit)
    }
    case 'contour':
      return renderContour(parseTable(job.data, SCHEMAS.contour))
    default:
      throw new Error(`unknown plot kind ${String(job.kind)}`)
  }
}

function finitePositive(values: number[]): number[] {
  return values.filter((v) => Number.isFinite(v) && v > 0)
}

function logRange(values: number[]): [number, number] {
  const ok = finitePositive(values)
  if (ok.length === 0) throw new Error('no positive finite values to plot')
  return [Math.min(...ok), Math.max(...ok)]
}

function renderEta(table: Table): string {
  const scene = new Scene()
  const nErr = table.header.length - 1
  const etas = table.rows.map((r) => r[0])
  const [eLo, eHi] = logRange(table.rows.flatMap((r) => r.slice(1)))
  const x = linearScale(Math.min(...etas), Math.max(...etas), PLOT_LEFT, PLOT_RIGHT)
  const y = log10Scale(eLo, eHi, PLOT_BOTTOM, PLOT_TOP)
  axes(scene, x, y, 'softness parameter', 'eigenvalue error')
  for (let j = 0; j < nErr; j += 1) {
    const pts = table.rows
      .filter((r) => Number.isFinite(r[1 + j]) && r[1 + j] > 0)
      .map((r) => [x(r[0]), y(r[1 + j])] as [number, number])
    scene.polyline(pts, `stroke="${PALETTE[j % PALETTE.length]}" stroke-width="1.5"`)
    scene.text(PLOT_RIGHT - 8, PLOT_TOP + 14 + 14 * j, `err${j + 1}`,
      `text-anchor="end" fill="${PALETTE[j % PALETTE.length]}"`)
  }
  // minimum marker on the first error column
  let best = -1
  table.rows.forEach((r, i) => {
    if (Number.isFinite(r[1]) && r[1] > 0 && (best < 0 || r[1] < table.rows[best][1])) best = i
  })
  if (best >= 0) {
    const r = table.rows[best]
    scene.circle(x(r[0]), y(r[1]), 4, 'fill="none" stroke="black" stroke-width="1.5"')
    scene.text(x(r[0]) + 6, y(r[1]) - 6, `min at eta=${fmt(r[0], 4)}`, '')
  }
  return scene.render('eigenvalue error vs softness parameter')
}

function seriesKey(eta: number, mode: number): string {
  return `${eta}#${mode}`
}

function renderConvergence(data: Table, fits: Table): string {
  const scene = new Scene()
  const nErr = data.header.length - 3
  const [hLo, hHi] = logRange(data.rows.map((r) => r[1]))
  const [eLo, eHi] = logRange(data.rows.flatMap((r) => r.slice(3)))
  const x = log10Scale(hLo, hHi, PLOT_LEFT, PLOT_RIGHT)
  const y = log10Scale(eLo, eHi, PLOT_BOTTOM, PLOT_TOP)
  axes(scene, x, y, 'mesh size', 'eigenvalue error')
  const slopes = new Map<string, number>()
  for (const row of fits.rows) {
    if (row[5] !== 0) slopes.set(seriesKey(row[0], row[1]), row[2])
  }
  const etas = [...new Set(data.rows.map((r) => r[2]))]
  let colorIndex = 0
  for (const eta of etas) {
    for (let mode = 1; mode <= nErr; mode += 1) {
      const rows = data.rows.filter((r) => r[2] === eta && Number.isFinite(r[2 + mode]) && r[2 + mode] > 0)
      if (rows.length === 0) continue
      const color = PALETTE[colorIndex % PALETTE.length]
      colorIndex += 1
      const pts = rows.map((r) => [x(r[1]), y(r[2 + mode])] as [number, number])
      scene.polyline(pts, `stroke="${color}" stroke-width="1.5"`)
      for (const [px, py] of pts) scene.circle(px, py, 2.5, `fill="${color}"`)
      const mid = pts[Math.floor(pts.length / 2)]
      const slope = slopes.get(seriesKey(eta, mode))
      const label = slope === undefined
        ? `eta=${fmt(eta, 4)} mode ${mode}`
        : `eta=${fmt(eta, 4)} mode ${mode}: slope ${slope.toFixed(2)}`
      scene.text(mid[0] + 6, mid[1] - 6, label, `fill="${color}"`)
    }
  }
  return scene.render('eigenvalue error convergence under mesh refinement')
}

function renderDomain(data: Table, fit?: Table): string {
  const scene = new Scene()
  const xs = data.rows.map((r) => r[0])
  const [eLo, eHi] = logRange(data.rows.map((r) => r[2]))
  const x = linearScale(Math.min(...xs), Math.max(...xs), PLOT_LEFT, PLOT_RIGHT)
  const y = log10Scale(eLo, eHi, PLOT_BOTTOM, PLOT_TOP)
  axes(scene, x, y, 'domain half-width', 'eigenvalue error')
  const hs = [...new Set(data.rows.map((r) => r[1]))]
  hs.forEach((h, i) => {
    const rows = data.rows.filter((r) => r[1] === h && r[2] > 0)
    const color = PALETTE[i % PALETTE.length]
    scene.polyline(rows.map((r) => [x(r[0]), y(r[2])] as [number, number]),
      `stroke="${color}" stroke-width="1.5"`)
    scene.text(PLOT_RIGHT - 8, PLOT_TOP + 14 + 14 * i, `h=${fmt(h, 4)}`,
      `text-anchor="end" fill="${color}"`)
  })
  if (fit !== undefined) {
    const [eta, slope, intercept] = fit.rows[0]
    const lo = Math.min(...xs)
    const hi = Math.max(...xs)
    const clamp = (v: number): number => Math.min(Math.max(v, eLo), eHi)
    scene.polyline([
      [x(lo), y(clamp(Math.pow(10, slope * lo + intercept)))],
      [x(hi), y(clamp(Math.pow(10, slope * hi + intercept)))],
    ], 'stroke="black" stroke-dasharray="6 3" stroke-width="1"')
    scene.text(PLOT_LEFT + 12, PLOT_TOP + 14,
      `fit (eta=${fmt(eta, 4)}): e = 10^(${slope.toFixed(2)} x + ${intercept.toFixed(2)})`, '')
  }
  return scene.render('eigenvalue error vs domain size')
}

/** Diverging palette symmetric about zero: t in [-1, 1]. */
export function divergingColor(t: number): string {
  const clamped = Math.max(-1, Math.min(1, t))
  const mix = (a: number, b: number, s: number): number => Math.round(a + (b - a) * s)
  // blue (negative) -> white (zero) -> red (positive)
  const s = Math.abs(clamped)
  const [r, g, b] = clamped < 0
    ? [mix(255, 33, s), mix(255, 102, s), mix(255, 172, s)]
    : [mix(255, 178, s), mix(255, 24, s), mix(255, 43, s)]
  return `rgb(${r},${g},${b})`
}

function renderContour(table: Table): string {
  const scene = new Scene()
  const xs = [...new Set(table.rows.map((r) => r[0]))].sort((a, b) => a - b)
  const ys = [...new Set(table.rows.map((r) => r[1]))].sort((a, b) => a - b)
  if (xs.length < 2 || ys.length < 2) throw new Error('contour grid needs at least 2x2 points')
  if (table.rows.length !== xs.length * ys.length) {
    throw new Error(`grid is not complete: ${table.rows.length} rows for ${xs.length}x${ys.length} points`)
  }
  const vmax = Math.max(...table.rows.map((r) => Math.abs(r[2])))
  if (vmax === 0) throw new Error('contour data is identically zero')
  const x = linearScale(xs[0], xs[xs.length - 1], PLOT_LEFT, PLOT_RIGHT)
  const y = linearScale(ys[0], ys[ys.length - 1], PLOT_BOTTOM, PLOT_TOP)
  axes(scene, x, y, 'x', 'y')
  const cellW = (PLOT_RIGHT - PLOT_LEFT) / (xs.length - 1)
  const cellH = (PLOT_BOTTOM - PLOT_TOP) / (ys.length - 1)
  for (const row of table.rows) {
    const px = x(row[0]) - cellW / 2
    const py = y(row[1]) - cellH / 2
    scene.rect(px, py, cellW, cellH, `fill="${divergingColor(row[2] / vmax)}"`)
  }
  scene.text(PLOT_RIGHT, PLOT_TOP - 8, `|value| <= ${fmt(vmax, 4)}, color symmetric about 0`,
    'text-anchor="end"')
  return scene.render('eigenfunction contour')
}
