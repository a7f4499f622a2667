/**
 * Strict CSV loading for the solver's artifact schemas.  Headers must match
 * the documented schema exactly (no column guessing); every cell must parse
 * as a finite number or NaN.
 */

import Papa from 'papaparse'

export interface Table {
  header: string[]
  rows: number[][]
}

/** Schema = fixed leading columns plus optionally a numbered tail like err1..errk. */
export interface Schema {
  fixed: string[]
  numberedTail?: string // e.g. "err" allows err1, err2, ... after the fixed part
}

export const SCHEMAS: Record<string, Schema> = {
  eta: { fixed: ['eta'], numberedTail: 'err' },
  convergence: { fixed: ['n', 'h', 'eta'], numberedTail: 'err' },
  convergenceFits: { fixed: ['eta', 'mode', 'slope', 'intercept', 'points', 'valid'] },
  domain: { fixed: ['x_eps', 'h', 'err1'] },
  domainFit: { fixed: ['eta', 'slope', 'intercept', 'points'] },
  contour: { fixed: ['x', 'y', 'value'] },
}

export function checkHeader(header: string[], schema: Schema): void {
  const { fixed, numberedTail } = schema
  const expected = fixed.join(',')
  const lead = header.slice(0, fixed.length).join(',')
  if (lead !== expected) {
    throw new Error(`header mismatch: expected it to start with "${expected}", got "${lead}"`)
  }
  const tail = header.slice(fixed.length)
  if (!numberedTail) {
    if (tail.length > 0) throw new Error(`unexpected trailing columns: ${tail.join(',')}`)
    return
  }
  if (tail.length === 0) throw new Error(`expected at least one ${numberedTail}1 column`)
  tail.forEach((name, i) => {
    if (name !== `${numberedTail}${i + 1}`) {
      throw new Error(`expected column ${numberedTail}${i + 1}, got "${name}"`)
    }
  })
}

export function parseTable(text: string, schema: Schema): Table {
  if (text.trim() === '') throw new Error('empty CSV')
  const parsed = Papa.parse<string[]>(text.trim(), { delimiter: ',', skipEmptyLines: true })
  if (parsed.errors.length > 0) {
    throw new Error(`CSV parse error: ${parsed.errors[0].message}`)
  }
  const data = parsed.data
  if (data.length === 0) throw new Error('empty CSV')
  const header = data[0]
  checkHeader(header, schema)
  const rows = data.slice(1).map((raw, rowIndex) => {
    if (raw.length !== header.length) {
      throw new Error(`row ${rowIndex + 2} has ${raw.length} cells, expected ${header.length}`)
    }
    return raw.map((cell) => {
      const value = Number(cell)
      if (cell.trim() === '' || (Number.isNaN(value) && cell.trim().toLowerCase() !== 'nan')) {
        throw new Error(`row ${rowIndex + 2}: cannot parse "${cell}" as a number`)
      }
      return value
    })
  })
  if (rows.length === 0) throw new Error('CSV holds a header but no data rows')
  return { header, rows }
}
