/**
 * Minimal deterministic SVG scene building: fixed canvas, linear/log scales,
 * tick generation, and a few mark helpers.  No timestamps, no randomness;
 * identical inputs yield byte-identical documents.
 */

export const WIDTH = 720
export const HEIGHT = 480
export const MARGIN = { left: 72, right: 24, top: 40, bottom: 56 }

export const PALETTE = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e', '#8c564b']

export function fmt(x: number, digits = 6): string {
  if (!Number.isFinite(x)) return String(x)
  if (x === 0) return '0'
  const s = x.toPrecision(digits)
  return s.includes('e') ? s : String(Number(s))
}

export interface Scale {
  (value: number): number
  ticks: number[]
  label: (tick: number) => string
}

export function linearScale(lo: number, hi: number, outLo: number, outHi: number): Scale {
  const span = hi === lo ? 1 : hi - lo
  const f = ((value: number) => outLo + ((value - lo) / span) * (outHi - outLo)) as Scale
  const step = niceStep(span / 6)
  const ticks: number[] = []
  for (let t = Math.ceil(lo / step) * step; t <= hi + 1e-12 * Math.abs(span); t += step) {
    ticks.push(Number(t.toPrecision(12)))
  }
  f.ticks = ticks
  f.label = (t) => fmt(t, 4)
  return f
}

export function log10Scale(lo: number, hi: number, outLo: number, outHi: number): Scale {
  const a = Math.log10(lo)
  const b = Math.log10(hi)
  const span = b === a ? 1 : b - a
  const f = ((value: number) => outLo + ((Math.log10(value) - a) / span) * (outHi - outLo)) as Scale
  const ticks: number[] = []
  const stride = Math.max(1, Math.round(span / 8))
  for (let e = Math.ceil(a); e <= Math.floor(b + 1e-12); e += stride) {
    ticks.push(Math.pow(10, e))
  }
  f.ticks = ticks
  f.label = (t) => `1e${Math.round(Math.log10(t))}`
  return f
}

function niceStep(raw: number): number {
  const mag = Math.pow(10, Math.floor(Math.log10(raw)))
  const norm = raw / mag
  const step = norm < 1.5 ? 1 : norm < 3.5 ? 2 : norm < 7.5 ? 5 : 10
  return step * mag
}

export function esc(text: string): string {
  return text.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;')
}

export class Scene {
  private parts: string[] = []

  add(part: string): void {
    this.parts.push(part)
  }

  text(x: number, y: number, content: string, attrs = ''): void {
    this.add(`<text x="${fmt(x)}" y="${fmt(y)}" ${attrs}>${esc(content)}</text>`)
  }

  line(x1: number, y1: number, x2: number, y2: number, attrs: string): void {
    this.add(`<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" ${attrs}/>`)
  }

  polyline(points: Array<[number, number]>, attrs: string): void {
    const path = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(' ')
    this.add(`<polyline points="${path}" fill="none" ${attrs}/>`)
  }

  circle(x: number, y: number, r: number, attrs: string): void {
    this.add(`<circle cx="${fmt(x)}" cy="${fmt(y)}" r="${fmt(r)}" ${attrs}/>`)
  }

  rect(x: number, y: number, w: number, h: number, attrs: string): void {
    this.add(`<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(w)}" height="${fmt(h)}" ${attrs}/>`)
  }

  render(title: string): string {
    const head =
      `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="Helvetica, Arial, sans-serif" font-size="12">\n` +
      `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>\n` +
      `<text x="${WIDTH / 2}" y="22" text-anchor="middle" font-size="15">${esc(title)}</text>\n`
    return head + this.parts.join('\n') + '\n</svg>\n'
  }
}

export function axes(scene: Scene, xScale: Scale, yScale: Scale, xLabel: string, yLabel: string): void {
  const { left, right, top, bottom } = MARGIN
  const x0 = left
  const x1 = WIDTH - right
  const y0 = HEIGHT - bottom
  const y1 = top
  scene.line(x0, y0, x1, y0, 'stroke="black"')
  scene.line(x0, y0, x0, y1, 'stroke="black"')
  for (const t of xScale.ticks) {
    const x = xScale(t)
    scene.line(x, y0, x, y0 + 5, 'stroke="black"')
    scene.text(x, y0 + 18, xScale.label(t), 'text-anchor="middle"')
  }
  for (const t of yScale.ticks) {
    const y = yScale(t)
    scene.line(x0 - 5, y, x0, y, 'stroke="black"')
    scene.text(x0 - 8, y + 4, yScale.label(t), 'text-anchor="end"')
    scene.line(x0, y, x1, y, 'stroke="#dddddd" stroke-width="0.5"')
  }
  scene.text((x0 + x1) / 2, HEIGHT - 16, xLabel, 'text-anchor="middle"')
  scene.text(16, (y0 + y1) / 2, yLabel, `text-anchor="middle" transform="rotate(-90 16 ${(y0 + y1) / 2})"`)
}
